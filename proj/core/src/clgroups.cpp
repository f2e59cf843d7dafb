#include "basewright/clgroups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include "basewright/errors.hpp"

#ifndef BASEWRIGHT_DEFAULT_DATA_DIR
#define BASEWRIGHT_DEFAULT_DATA_DIR "data"
#endif

namespace bw {

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::GU: return "GU";
    case Family::Sp: return "Sp";
    case Family::GOplus: return "GO+";
    case Family::GOminus: return "GO-";
    case Family::GOcirc: return "GOo";
  }
  return "?";
}

Family parse_family(const std::string& s0) {
  std::string s;
  for (char c : s0) s += char(std::tolower((unsigned char)c));
  if (s == "gl" || s == "pgl") return Family::GL;
  if (s == "gu" || s == "pgu") return Family::GU;
  if (s == "sp" || s == "psp") return Family::Sp;
  if (s == "go+" || s == "goplus" || s == "pgo+") return Family::GOplus;
  if (s == "go-" || s == "gominus" || s == "pgo-") return Family::GOminus;
  if (s == "goo" || s == "go0" || s == "gocirc" || s == "go" || s == "pgo") return Family::GOcirc;
  throw Error(Errc::BadParams, "unknown family '" + s0 + "'");
}

bool is_orthogonal(Family f) {
  return f == Family::GOplus || f == Family::GOminus || f == Family::GOcirc;
}

Sign family_sign(Family f) {
  switch (f) {
    case Family::GOplus: return Sign::Plus;
    case Family::GOminus: return Sign::Minus;
    case Family::GOcirc: return Sign::Circ;
    default: return Sign::None;
  }
}

std::string MatrixGroup::name() const {
  return std::string(family_name(family)) + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
}

void check_admissible(Family f, int d, int q) {
  auto bad = [&](const std::string& why) {
    throw Error(Errc::Inadmissible, std::string(family_name(f)) + "(" + std::to_string(d) + "," +
                                        std::to_string(q) + "): " + why);
  };
  try {
    if (f == Family::GU)
      Field::gf_sq(q);
    else
      Field::gf(q);
  } catch (const Error&) {
    bad("field out of range");
  }
  switch (f) {
    case Family::GL:
    case Family::GU:
      if (d < 2) bad("d < 2");
      break;
    case Family::Sp:
    case Family::GOplus:
    case Family::GOminus:
      if (d < 2 || d % 2) bad("d must be even and >= 2");
      break;
    case Family::GOcirc:
      if (d < 3 || d % 2 == 0) bad("d must be odd and >= 3");
      break;
  }
}

BigInt order_formula(Family f, int d, int q) {
  check_admissible(f, d, q);
  BigInt Q = q, r = 1;
  switch (f) {
    case Family::GL:
      for (int i = 0; i < d; ++i) r *= ipow(Q, d) - ipow(Q, i);
      return r;
    case Family::GU:
      r = ipow(Q, d * (d - 1) / 2);
      for (int i = 1; i <= d; ++i) r *= ipow(Q, i) - (i % 2 ? -1 : 1);
      return r;
    case Family::Sp: {
      int m = d / 2;
      r = ipow(Q, m * m);
      for (int i = 1; i <= m; ++i) r *= ipow(Q, 2 * i) - 1;
      return r;
    }
    case Family::GOplus:
    case Family::GOminus: {
      int m = d / 2;
      r = 2 * ipow(Q, m * (m - 1));
      r *= f == Family::GOplus ? ipow(Q, m) - 1 : ipow(Q, m) + 1;
      for (int i = 1; i < m; ++i) r *= ipow(Q, 2 * i) - 1;
      return r;
    }
    case Family::GOcirc: {
      int m = d / 2;
      r = (q % 2 ? 2 : 1) * ipow(Q, m * m);
      for (int i = 1; i <= m; ++i) r *= ipow(Q, 2 * i) - 1;
      return r;
    }
  }
  return r;
}

std::vector<Matrix> scalars(const MatrixGroup& G) {
  const Field& K = G.field();
  std::vector<Matrix> out;
  for (int l = 1; l < K.order(); ++l) {
    elt lam = elt(l);
    bool ok = false;
    switch (G.family) {
      case Family::GL: ok = true; break;
      case Family::GU: ok = K.pow(lam, G.q + 1) == 1; break;
      default: ok = K.mul(lam, lam) == 1; break;
    }
    if (ok) out.push_back(Matrix::scalar(G.d, lam));
  }
  return out;
}

std::size_t scalar_count(const MatrixGroup& G) { return scalars(G).size(); }

Perm vector_perm(const Field& F, const Matrix& g) {
  int d = g.d;
  std::uint64_t N = 1;
  for (int i = 0; i < d; ++i) N *= F.order();
  Perm p(N - 1);
  Vec v(d, 0);
  for (std::uint64_t idx = 1; idx < N; ++idx) {
    // increment big-endian digits
    for (int i = d - 1; i >= 0; --i) {
      if (++v[i] < F.order()) break;
      v[i] = 0;
    }
    p[idx - 1] = std::uint32_t(vec_index(F, apply(F, v, g)) - 1);
  }
  return p;
}

const PointSet& projective_points(const Field& F, int d) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, int>, std::unique_ptr<PointSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(&F, d);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  std::uint64_t N = 1;
  for (int i = 0; i < d; ++i) N *= F.order();
  if (N > (1u << 24)) throw Error(Errc::OrbitTooLarge, "too many 1-spaces");
  auto P = std::make_unique<PointSet>();
  P->index_of.assign(N, -1);
  Vec v(d, 0);
  for (std::uint64_t idx = 1; idx < N; ++idx) {
    for (int i = d - 1; i >= 0; --i) {
      if (++v[i] < F.order()) break;
      v[i] = 0;
    }
    elt lead = 0;
    for (elt x : v)
      if (x) { lead = x; break; }
    if (lead != 1) continue;
    P->index_of[idx] = std::int32_t(P->pts.size());
    P->pts.push_back(v);
  }
  auto& slot = cache[key];
  slot = std::move(P);
  return *slot;
}

std::uint32_t point_of(const Field& F, const PointSet& P, const Vec& v) {
  return std::uint32_t(P.index_of[vec_index(F, normalize(F, v))]);
}

Perm point_perm(const Field& F, const PointSet& P, const Matrix& g) {
  Perm p(P.pts.size());
  for (std::size_t i = 0; i < P.pts.size(); ++i) p[i] = point_of(F, P, apply(F, P.pts[i], g));
  return p;
}

namespace {

Vec random_vec(const Field& K, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(0, K.order() - 1);
  Vec v(d);
  for (auto& x : v) x = elt(u(rng));
  return v;
}

elt random_nonzero(const Field& K, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(1, K.order() - 1);
  return elt(u(rng));
}

// v -> v + c(v) u, with c linear in v given by coefficient vector
Matrix rank_one(const ClassicalForm& C, const Vec& u, const std::function<elt(const Vec&)>& coef) {
  const Field& K = C.field();
  Matrix g = Matrix::identity(C.d);
  for (int i = 0; i < C.d; ++i) {
    elt c = coef(unit(C.d, i));
    for (int j = 0; j < C.d; ++j) g(i, j) = K.add(g(i, j), K.mul(c, u[j]));
  }
  return g;
}

Matrix elementary(const MatrixGroup& G, std::mt19937_64& rng) {
  const ClassicalForm& C = G.form;
  const Field& K = G.field();
  int d = G.d;
  switch (G.family) {
    case Family::GL:
      break;
    case Family::Sp: {
      Vec u;
      do u = random_vec(K, d, rng);
      while (is_zero(u));
      elt lam = random_nonzero(K, rng);
      return rank_one(C, u, [&](const Vec& v) { return K.mul(lam, C.B(v, u)); });
    }
    case Family::GU: {
      bool quasi = (rng() % 3) == 0;
      if (quasi) {
        Vec u;
        do u = random_vec(K, d, rng);
        while (is_zero(u) || C.B(u, u) == 0);
        std::vector<elt> rhos;
        for (int r = 2; r < K.order(); ++r)
          if (K.pow(elt(r), G.q + 1) == 1) rhos.push_back(elt(r));
        elt rho = rhos[rng() % rhos.size()];
        elt c = K.div(K.sub(rho, 1), C.B(u, u));
        return rank_one(C, u, [&](const Vec& v) { return K.mul(c, C.B(v, u)); });
      }
      std::vector<elt> lams;
      for (int r = 1; r < K.order(); ++r)
        if (K.trace(elt(r)) == 0) lams.push_back(elt(r));
      Vec u;
      do u = random_vec(K, d, rng);
      while (is_zero(u) || C.B(u, u) != 0);
      elt lam = lams[rng() % lams.size()];
      return rank_one(C, u, [&](const Vec& v) { return K.mul(lam, C.B(v, u)); });
    }
    case Family::GOplus:
    case Family::GOminus:
    case Family::GOcirc: {
      Subspace rad = perp(C, whole(d));
      Vec u;
      do u = random_vec(K, d, rng);
      while (is_zero(u) || C.Q(u) == 0 || contains(K, rad, u));
      elt c = K.neg(K.inv(C.Q(u)));
      return rank_one(C, u, [&](const Vec& v) { return K.mul(c, C.B(v, u)); });
    }
  }
  return Matrix::identity(d);
}

Matrix random_product(const MatrixGroup& G, std::mt19937_64& rng) {
  Matrix g = elementary(G, rng);
  for (int i = 1; i < G.d; ++i) g = mul(G.field(), g, elementary(G, rng));
  return g;
}

std::vector<Matrix> gl_generators(const Field& K, int d) {
  std::vector<Matrix> gens;
  Matrix a = Matrix::identity(d);
  a(0, 0) = K.primitive();
  if (K.order() > 2) gens.push_back(a);
  Matrix t = Matrix::identity(d);
  t(0, 1) = 1;
  gens.push_back(t);
  Matrix c(d);
  for (int i = 0; i < d; ++i) c(i, (i + 1) % d) = 1;
  gens.push_back(c);
  Matrix s = Matrix::identity(d);
  s(0, 0) = s(1, 1) = 0;
  s(0, 1) = s(1, 0) = 1;
  gens.push_back(s);
  return gens;
}

void certify(MatrixGroup& G, std::mt19937_64& rng) {
  const Field& K = G.field();
  std::uint64_t N = 1;
  for (int i = 0; i < G.d; ++i) N *= K.order();
  bool on_vectors = N - 1 <= 70000;
  BigInt target = G.order;
  const PointSet* P = nullptr;
  if (!on_vectors) {
    P = &projective_points(K, G.d);
    target = G.order / scalar_count(G);
  }
  PermGroup PG;
  auto image = [&](const Matrix& g) { return on_vectors ? vector_perm(K, g) : point_perm(K, *P, g); };
  PG.n = on_vectors ? N - 1 : P->pts.size();
  for (auto& g : G.gens) PG.gens.push_back(image(g));
  for (int attempt = 0; attempt < 16; ++attempt) {
    try {
      random_schreier_sims(PG, target, {}, 0xc0ffee + attempt);
      G.certified_on = on_vectors ? "vectors" : "points";
      G.certified_degree = PG.n;
      return;
    } catch (const Error& e) {
      if (e.code() != Errc::Incomplete || G.family == Family::GL) throw;
    }
    Matrix extra = (attempt % 2) ? elementary(G, rng) : random_product(G, rng);
    G.gens.push_back(extra);
    PG.gens.push_back(image(extra));
  }
  throw Error(Errc::OrderMismatch, G.name() + ": generators do not reach the order formula");
}

}  // namespace

const MatrixGroup& build_group(Family f, int d, int q) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<MatrixGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(int(f), d, q);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  check_admissible(f, d, q);
  auto G = std::make_unique<MatrixGroup>();
  G->family = f;
  G->d = d;
  G->q = q;
  G->F = f == Family::GU ? &Field::gf_sq(q) : &Field::gf(q);
  FormKind kind = f == Family::GL   ? FormKind::Linear
                  : f == Family::GU ? FormKind::Unitary
                  : f == Family::Sp ? FormKind::Symplectic
                                    : FormKind::Quadratic;
  G->form = standard_form(kind, family_sign(f), d, *G->F);
  G->order = order_formula(f, d, q);
  std::mt19937_64 rng(std::uint64_t(int(f)) * 1000003u + std::uint64_t(d) * 1009u + std::uint64_t(q));
  if (f == Family::GL) {
    G->gens = gl_generators(*G->F, d);
  } else {
    G->gens.push_back(random_product(*G, rng));
    G->gens.push_back(random_product(*G, rng));
    G->gens.push_back(elementary(*G, rng));
    // reflections generate only half of GO+_4(2); add e1 <-> e2, f1 <-> f2
    if (f == Family::GOplus && d == 4 && q == 2) {
      Matrix s(d);
      s(0, 1) = s(1, 0) = s(2, 3) = s(3, 2) = 1;
      G->gens.push_back(s);
    }
  }
  for (auto& g : G->gens)
    if (!is_isometry(G->form, g)) throw Error(Errc::OrderMismatch, "generator is not an isometry");
  certify(*G, rng);
  for (auto& g : G->gens)
    if (!is_isometry(G->form, g)) throw Error(Errc::OrderMismatch, "generator is not an isometry");
  auto& slot = cache[key];
  slot = std::move(G);
  return *slot;
}

Matrix SpOrthoModel::to_symplectic(const Matrix& g) const {
  int n = g.d - 1;
  Matrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = g(i, j);
  return h;
}

SpOrthoModel sp_to_odd_orthogonal(int m, int q) {
  if (q % 2) throw Error(Errc::OddQ, "the odd-orthogonal model needs q even");
  SpOrthoModel M;
  M.go = &build_group(Family::GOcirc, 2 * m + 1, q);
  M.sp_form = standard_form(FormKind::Symplectic, Sign::None, 2 * m, Field::gf(q));
  if (M.go->order != order_formula(Family::Sp, 2 * m, q))
    throw Error(Errc::OrderMismatch, "|GO_{2m+1}(q)| != |Sp_{2m}(q)|");
  return M;
}

std::string data_dir() {
  if (const char* e = std::getenv("BASEWRIGHT_DATA"); e && *e) return e;
  return BASEWRIGHT_DEFAULT_DATA_DIR;
}

namespace {

struct DataFile {
  std::string name;
  std::size_t degree = 0;
  BigInt order;
  std::vector<std::string> lines;
};

DataFile read_data(const std::string& name) {
  std::string path = data_dir() + "/" + name + ".txt";
  std::ifstream in(path);
  if (!in) throw Error(Errc::MissingData, "cannot open " + path);
  DataFile D;
  std::string header;
  std::string ord;
  if (!std::getline(in, header)) throw Error(Errc::MissingData, path + " is empty");
  std::istringstream hs(header);
  if (!(hs >> D.name >> D.degree >> ord)) throw Error(Errc::BadInput, "bad header in " + path);
  D.order = BigInt(ord);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find('(') == std::string::npos) continue;
    D.lines.push_back(line);
  }
  return D;
}

}  // namespace

BigInt permgroup_expected_order(const std::string& name) { return read_data(name).order; }

PermGroup load_permgroup(const std::string& name) {
  DataFile D = read_data(name);
  PermGroup G;
  G.n = D.degree;
  G.name = D.name;
  for (auto& l : D.lines) G.gens.push_back(parse_cycles(l, D.degree));
  StabChain C = schreier_sims(G);
  if (C.order() != D.order)
    throw Error(Errc::OrderMismatch, name + ": Schreier-Sims order " + C.order().str() +
                                         " differs from " + D.order.str());
  return G;
}

}  // namespace bw
