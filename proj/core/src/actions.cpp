#include "basewright/actions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>

#include "basewright/errors.hpp"

namespace bw {

const char* action_name(ActionKind k) {
  switch (k) {
    case ActionKind::Singular: return "singular";
    case ActionKind::Nondeg: return "nondeg";
    case ActionKind::Nonsingular1: return "nonsingular1";
    case ActionKind::Coset: return "coset";
    case ActionKind::Partitions: return "partitions";
  }
  return "?";
}

ActionKind parse_action(const std::string& s) {
  if (s == "singular" || s == "S") return ActionKind::Singular;
  if (s == "nondeg" || s == "N") return ActionKind::Nondeg;
  if (s == "nonsingular1" || s == "nonsingular") return ActionKind::Nonsingular1;
  if (s == "coset") return ActionKind::Coset;
  if (s == "partitions") return ActionKind::Partitions;
  throw Error(Errc::BadParams, "unknown action '" + s + "'");
}

ActionSpec ActionSpec::singular(Family f, int d, int q, int k) {
  ActionSpec a;
  a.kind = ActionKind::Singular;
  a.family = f;
  a.d = d;
  a.q = q;
  a.k = k;
  return a;
}

ActionSpec ActionSpec::nondeg(Family f, int d, int q, int k, Sign sign) {
  ActionSpec a = singular(f, d, q, k);
  a.kind = ActionKind::Nondeg;
  if (is_orthogonal(f) && sign == Sign::None) sign = Sign::Plus;
  a.sign = is_orthogonal(f) ? sign : Sign::None;
  return a;
}

ActionSpec ActionSpec::nonsingular1(Family f, int d, int q) {
  ActionSpec a = singular(f, d, q, 1);
  a.kind = ActionKind::Nonsingular1;
  return a;
}

ActionSpec ActionSpec::coset(int m, int q, Sign sign) {
  ActionSpec a = singular(Family::GOcirc, 2 * m + 1, q, 2 * m);
  a.kind = ActionKind::Coset;
  a.m = m;
  a.sign = sign;
  return a;
}

ActionSpec ActionSpec::partitions(int ell, int s, int t) {
  ActionSpec a;
  a.kind = ActionKind::Partitions;
  a.ell = ell;
  a.s = s;
  a.t = t;
  return a;
}

std::string ActionSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ActionKind::Partitions:
      os << "Sym(" << ell << ") on partitions into " << s << " blocks of size " << t;
      return os.str();
    case ActionKind::Coset:
      os << "Sp(" << 2 * m << "," << q << ") on GO" << sign_name(sign) << " cosets";
      return os.str();
    default:
      break;
  }
  os << "P" << family_name(family) << "(" << d << "," << q << ") on ";
  if (kind == ActionKind::Singular) os << (family == Family::GL ? "" : "totally singular ") << k << "-spaces";
  if (kind == ActionKind::Nondeg) {
    os << "non-degenerate " << k << "-spaces";
    if (sign != Sign::None) os << " (" << sign_name(sign) << ")";
  }
  if (kind == ActionKind::Nonsingular1) os << "non-singular 1-spaces";
  return os.str();
}

const MatrixGroup& acting_group(const ActionSpec& spec) {
  if (spec.kind == ActionKind::Partitions) throw Error(Errc::BadParams, "partitions have no matrix group");
  if (spec.kind == ActionKind::Coset) return *sp_to_odd_orthogonal(spec.m, spec.q).go;
  return build_group(spec.family, spec.d, spec.q);
}

Tag expected_tag(const ActionSpec& spec) {
  Tag t;
  switch (spec.kind) {
    case ActionKind::Singular:
    case ActionKind::Partitions:
      return t;
    case ActionKind::Nonsingular1:
      t.kind = Tag::NonsingularOne;
      return t;
    case ActionKind::Coset:
      t.kind = Tag::Nondegenerate;
      t.sign = spec.sign;
      return t;
    case ActionKind::Nondeg:
      break;
  }
  t.kind = Tag::Nondegenerate;
  if (!is_orthogonal(spec.family)) return t;
  if (spec.k % 2 == 0) {
    t.sign = spec.sign;
    return t;
  }
  t.sign = Sign::Circ;
  if (spec.q % 2 == 1 && spec.k < spec.d) t.aux = spec.sign == Sign::Minus ? -1 : 1;
  return t;
}

namespace {

void check_spec(const ActionSpec& spec) {
  if (spec.kind == ActionKind::Partitions) return;
  check_admissible(spec.family, spec.d, spec.q);
  if (spec.k < 1 || spec.k >= spec.d) throw Error(Errc::Inadmissible, "k out of range");
  if (spec.kind == ActionKind::Nonsingular1 && (spec.q % 2 || !is_orthogonal(spec.family)))
    throw Error(Errc::Inadmissible, "non-singular 1-spaces need an orthogonal group over even q");
  if (spec.kind == ActionKind::Nondeg && spec.family == Family::GL)
    throw Error(Errc::Inadmissible, "GL has no form");
  if (spec.kind == ActionKind::Nondeg && spec.family == Family::Sp && spec.k % 2)
    throw Error(Errc::Inadmissible, "symplectic non-degenerate spaces have even dimension");
  if (spec.kind == ActionKind::Nondeg && is_orthogonal(spec.family) && spec.k % 2 && spec.q % 2 == 0)
    throw Error(Errc::Inadmissible, "use nonsingular1 for odd dimension over even q");
  if (spec.kind == ActionKind::Coset && spec.q % 2) throw Error(Errc::OddQ, "coset action needs q even");
}

Subspace span_of(const Field& K, const std::vector<Vec>& v, int d) { return rref(K, v, d); }

// first vector v (lex order of coefficients) with classify(<base, v>) == want
Subspace scan_extend(const ClassicalForm& C, const std::vector<Vec>& base, const Tag& want, bool avoid_radical) {
  const Field& K = C.field();
  Subspace rad = perp(C, whole(C.d));
  std::uint64_t N = 1;
  for (int i = 0; i < C.d; ++i) N *= K.order();
  Subspace B0 = span_of(K, base, C.d);
  for (std::uint64_t idx = 1; idx < N; ++idx) {
    Vec v = vec_from_index(K, idx, C.d);
    if (v != normalize(K, v)) continue;
    if (contains(K, B0, v)) continue;
    if (avoid_radical && contains(K, rad, v)) continue;
    auto rows = base;
    rows.push_back(v);
    Subspace U = span_of(K, rows, C.d);
    if (classify(C, U) == want) return U;
  }
  throw Error(Errc::SeedTagMismatch, "no subspace with tag " + tag_name(want));
}

}  // namespace

Subspace default_seed(const ActionSpec& spec) {
  check_spec(spec);
  const MatrixGroup& G = acting_group(spec);
  const ClassicalForm& C = G.form;
  const Field& K = G.field();
  int d = spec.d, k = spec.k;
  std::vector<Vec> rows;
  auto E = [&](int i) { return unit(d, C.e(i)); };
  auto Fv = [&](int i) { return unit(d, C.f(i)); };
  switch (spec.kind) {
    case ActionKind::Partitions:
      throw Error(Errc::BadParams, "no subspace seed for partitions");
    case ActionKind::Singular:
      if (G.family == Family::GL) {
        for (int i = 0; i < k; ++i) rows.push_back(unit(d, i));
      } else {
        if (k > C.a) throw Error(Errc::Inadmissible, "k exceeds the Witt index");
        for (int i = 1; i <= k; ++i) rows.push_back(E(i));
      }
      return span_of(K, rows, d);
    case ActionKind::Nonsingular1:
      return scan_extend(C, {}, expected_tag(spec), true);
    case ActionKind::Coset: {
      int m = spec.m;
      if (spec.sign == Sign::Plus) {
        for (int i = 1; i <= m; ++i) { rows.push_back(E(i)); rows.push_back(Fv(i)); }
      } else {
        elt lam = K.sqrt(K.find_zeta());
        Vec x = unit(d, C.x());
        rows.push_back(vadd(K, E(1), x));
        rows.push_back(axpy(K, Fv(1), lam, x));
        for (int i = 2; i <= m; ++i) { rows.push_back(E(i)); rows.push_back(Fv(i)); }
      }
      return span_of(K, rows, d);
    }
    case ActionKind::Nondeg:
      break;
  }
  Tag want = expected_tag(spec);
  int pairs = k / 2;
  bool odd = k % 2;
  if (C.quadratic() && !odd && spec.sign == Sign::Minus) {
    --pairs;
    for (int i = 1; i <= pairs; ++i) { rows.push_back(E(i)); rows.push_back(Fv(i)); }
    if (C.sign == Sign::Minus) {
      rows.push_back(unit(d, C.x()));
      rows.push_back(unit(d, C.y()));
    } else {
      int j = pairs + 1;
      if (j + 1 > C.a) throw Error(Errc::Inadmissible, "no room for an elliptic pair");
      elt z = K.find_zeta();
      rows.push_back(vadd(K, E(j), Fv(j)));
      rows.push_back(axpy(K, vadd(K, E(j + 1), Fv(j)), z, Fv(j + 1)));
    }
    Subspace U = span_of(K, rows, d);
    if (classify(C, U) != want) throw Error(Errc::SeedTagMismatch, "seed " + tag_name(classify(C, U)));
    return U;
  }
  if (pairs > C.a) throw Error(Errc::Inadmissible, "not enough hyperbolic pairs");
  for (int i = 1; i <= pairs; ++i) { rows.push_back(E(i)); rows.push_back(Fv(i)); }
  if (!odd) {
    Subspace U = span_of(K, rows, d);
    if (classify(C, U) != want) throw Error(Errc::SeedTagMismatch, "seed " + tag_name(classify(C, U)));
    return U;
  }
  return scan_extend(C, rows, want, false);
}

std::optional<std::uint32_t> Orbit::find(const Subspace& U) const {
  if (points.empty() || U.k != points[0].k) return std::nullopt;
  auto it = index.find(pack_key(group->field(), U));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string partition_key(const Partition& P, int ell) {
  std::string key(ell, '\0');
  for (std::size_t b = 0; b < P.size(); ++b)
    for (int x : P[b]) key[x] = char(b);
  return key;
}

}  // namespace

std::optional<std::uint32_t> Orbit::find(const Partition& P) const {
  auto it = pindex.find(partition_key(canonical_partition(P), spec.ell));
  if (it == pindex.end()) return std::nullopt;
  return it->second;
}

std::string Orbit::point_str(std::uint32_t i) const {
  if (spec.kind == ActionKind::Partitions) {
    std::ostringstream os;
    os << "{";
    for (std::size_t b = 0; b < partitions[i].size(); ++b) {
      os << (b ? "|" : "");
      for (std::size_t j = 0; j < partitions[i][b].size(); ++j) os << (j ? "," : "") << partitions[i][b][j] + 1;
    }
    os << "}";
    return os.str();
  }
  return str(group->field(), points[i]);
}

BigInt Orbit::image_order() const {
  if (spec.kind == ActionKind::Partitions) {
    BigInt f = 1;
    for (int i = 2; i <= spec.ell; ++i) f *= i;
    return f;
  }
  return group->order / scalar_count(*group);
}

Orbit enumerate_orbit(const ActionSpec& spec, const Subspace& seed, std::size_t cap) {
  check_spec(spec);
  if (spec.kind == ActionKind::Partitions) return partition_action(spec.ell, spec.s, spec.t);
  const MatrixGroup& G = acting_group(spec);
  const Field& K = G.field();
  Tag want = expected_tag(spec);
  if (seed.k != spec.k || seed.d != spec.d) throw Error(Errc::SeedTagMismatch, "seed has the wrong dimension");
  if (G.family != Family::GL && classify(G.form, seed) != want)
    throw Error(Errc::SeedTagMismatch, "seed is " + tag_name(classify(G.form, seed)) + ", expected " + tag_name(want));
  Orbit O;
  O.spec = spec;
  O.group = &G;
  std::size_t ng = G.gens.size();
  std::vector<std::vector<std::uint32_t>> img(ng);
  O.points.push_back(seed);
  O.index.emplace(pack_key(K, seed), 0);
  for (std::size_t h = 0; h < O.points.size(); ++h) {
    for (std::size_t g = 0; g < ng; ++g) {
      Subspace W = act(K, O.points[h], G.gens[g]);
      u128 key = pack_key(K, W);
      auto it = O.index.find(key);
      std::uint32_t id;
      if (it == O.index.end()) {
        if (O.points.size() >= cap)
          throw Error(Errc::OrbitTooLarge, spec.describe() + " exceeds " + std::to_string(cap) + " points");
        id = std::uint32_t(O.points.size());
        O.index.emplace(key, id);
        O.points.push_back(std::move(W));
      } else {
        id = it->second;
      }
      img[g].push_back(id);
    }
  }
  // lexicographic renumbering
  std::size_t n = O.points.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return O.points[a] < O.points[b]; });
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = std::uint32_t(i);
  std::vector<Subspace> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[rank[i]] = std::move(O.points[i]);
  O.points = std::move(pts);
  O.index.clear();
  O.index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) O.index.emplace(pack_key(K, O.points[i]), std::uint32_t(i));
  O.perms.n = n;
  O.perms.name = spec.describe();
  for (std::size_t g = 0; g < ng; ++g) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[rank[i]] = rank[img[g][i]];
    O.perms.gens.push_back(std::move(p));
  }
  return O;
}

Orbit enumerate_orbit(const ActionSpec& spec, std::size_t cap) {
  if (spec.kind == ActionKind::Partitions) return partition_action(spec.ell, spec.s, spec.t);
  return enumerate_orbit(spec, default_seed(spec), cap);
}

Partition canonical_partition(Partition P) {
  for (auto& b : P) std::sort(b.begin(), b.end());
  std::sort(P.begin(), P.end());
  return P;
}

Orbit partition_action(int ell, int s, int t) {
  if (s < 2 || t < 2 || ell != s * t || ell < 5) throw Error(Errc::BadShape, "need ell = s*t, s,t >= 2, ell >= 5");
  Orbit O;
  O.spec = ActionSpec::partitions(ell, s, t);
  Perm swap = perm_identity(ell), cyc(ell);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < ell; ++i) cyc[i] = std::uint32_t((i + 1) % ell);
  std::vector<Perm> sym = {swap, cyc};
  Partition seed(s);
  for (int i = 0; i < ell; ++i) seed[i / t].push_back(i);
  seed = canonical_partition(seed);
  O.partitions.push_back(seed);
  O.pindex.emplace(partition_key(seed, ell), 0);
  std::vector<std::vector<std::uint32_t>> img(2);
  for (std::size_t h = 0; h < O.partitions.size(); ++h)
    for (std::size_t g = 0; g < 2; ++g) {
      Partition P = O.partitions[h];
      for (auto& b : P)
        for (auto& x : b) x = int(sym[g][x]);
      P = canonical_partition(P);
      std::string key = partition_key(P, ell);
      auto it = O.pindex.find(key);
      std::uint32_t id;
      if (it == O.pindex.end()) {
        id = std::uint32_t(O.partitions.size());
        O.pindex.emplace(key, id);
        O.partitions.push_back(P);
      } else {
        id = it->second;
      }
      img[g].push_back(id);
    }
  std::size_t n = O.partitions.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return O.partitions[a] < O.partitions[b]; });
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = std::uint32_t(i);
  std::vector<Partition> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[rank[i]] = O.partitions[i];
  O.partitions = pts;
  O.pindex.clear();
  for (std::size_t i = 0; i < n; ++i) O.pindex.emplace(partition_key(O.partitions[i], ell), std::uint32_t(i));
  O.perms.n = n;
  O.perms.name = O.spec.describe();
  for (std::size_t g = 0; g < 2; ++g) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[rank[i]] = rank[img[g][i]];
    O.perms.gens.push_back(p);
  }
  return O;
}

namespace {

BigInt P(int q, int e) { return ipow(BigInt(q), unsigned(e)); }

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) throw Error(Errc::NoFormula, "formula does not divide evenly");
  return a / b;
}

int sgn(Sign s) { return s == Sign::Minus ? -1 : 1; }

}  // namespace

BigInt degree_formula(const ActionSpec& spec) {
  if (spec.kind == ActionKind::Partitions) {
    if (spec.s < 2 || spec.t < 2 || spec.ell != spec.s * spec.t) throw Error(Errc::BadShape, "partition shape");
    BigInt num = 1, den = 1;
    for (int i = 2; i <= spec.ell; ++i) num *= i;
    BigInt tf = 1;
    for (int i = 2; i <= spec.t; ++i) tf *= i;
    for (int i = 0; i < spec.s; ++i) den *= tf;
    for (int i = 2; i <= spec.s; ++i) den *= i;
    return exact_div(num, den);
  }
  check_spec(spec);
  int d = spec.d, q = spec.q, k = spec.k;
  BigInt num = 1, den = 1;
  if (spec.kind == ActionKind::Coset) {
    int m = spec.m;
    return exact_div(P(q, m) * (P(q, m) + sgn(spec.sign)), 2);
  }
  switch (spec.family) {
    case Family::GL:
      if (spec.kind != ActionKind::Singular) break;
      for (int i = 0; i < k; ++i) {
        num *= P(q, d - i) - 1;
        den *= P(q, i + 1) - 1;
      }
      return exact_div(num, den);
    case Family::Sp:
      if (spec.kind == ActionKind::Singular) {
        if (k > d / 2) break;
        for (int i = 1; i <= k; ++i) {
          num *= P(q, d - 2 * k + 2 * i) - 1;
          den *= P(q, i) - 1;
        }
        return exact_div(num, den);
      }
      if (spec.kind == ActionKind::Nondeg) {
        num = P(q, k * (d - k) / 2);
        for (int i = (d - k + 2) / 2; i <= d / 2; ++i) num *= P(q, 2 * i) - 1;
        for (int i = 1; i <= k / 2; ++i) den *= P(q, 2 * i) - 1;
        return exact_div(num, den);
      }
      break;
    case Family::GU: {
      auto term = [&](int i) { return P(q, i) - (i % 2 ? -1 : 1); };
      if (spec.kind == ActionKind::Singular) {
        if (2 * k > d) break;
        for (int i = d - 2 * k + 1; i <= d; ++i) num *= term(i);
        for (int i = 1; i <= k; ++i) den *= P(q, 2 * i) - 1;
        return exact_div(num, den);
      }
      if (spec.kind == ActionKind::Nondeg) {
        num = P(q, k * (d - k));
        for (int i = d - k + 1; i <= d; ++i) num *= term(i);
        for (int i = 1; i <= k; ++i) den *= term(i);
        return exact_div(num, den);
      }
      break;
    }
    case Family::GOplus:
    case Family::GOminus: {
      int eps = spec.family == Family::GOplus ? 1 : -1;
      int h = d / 2;
      if (spec.kind == ActionKind::Singular) {
        if (k > h - 1) break;
        num = (P(q, h) - eps) * (P(q, h - k) + eps);
        for (int i = h - k + 1; i <= h - 1; ++i) num *= P(q, 2 * i) - 1;
        for (int i = 1; i <= k; ++i) den *= P(q, i) - 1;
        return exact_div(num, den);
      }
      bool odd_k = k % 2 == 1;
      if (spec.kind == ActionKind::Nonsingular1 || (spec.kind == ActionKind::Nondeg && odd_k)) {
        num = P(q, (k * d - k * k - 1) / 2) * (P(q, h) - eps);
        for (int i = (d - k + 1) / 2; i <= h - 1; ++i) num *= P(q, 2 * i) - 1;
        den = q % 2 ? 2 : 1;
        for (int i = 1; i <= (k - 1) / 2; ++i) den *= P(q, 2 * i) - 1;
        return exact_div(num, den);
      }
      if (spec.kind == ActionKind::Nondeg) {
        int e = sgn(spec.sign);
        if (2 * k > d && false) break;
        num = P(q, k * (d - k) / 2) * (P(q, h) - eps);
        for (int i = (d - k) / 2; i <= h - 1; ++i) num *= P(q, 2 * i) - 1;
        den = 2 * (P(q, k / 2) - e) * (P(q, (d - k) / 2) - eps * e);
        for (int i = 1; i <= k / 2 - 1; ++i) den *= P(q, 2 * i) - 1;
        return exact_div(num, den);
      }
      break;
    }
    case Family::GOcirc: {
      if (spec.kind == ActionKind::Singular) {
        if (2 * k > d - 1) break;
        for (int i = (d - 2 * k + 1) / 2; i <= (d - 1) / 2; ++i) num *= P(q, 2 * i) - 1;
        for (int i = 1; i <= k; ++i) den *= P(q, i) - 1;
        return exact_div(num, den);
      }
      if (spec.kind == ActionKind::Nondeg) {
        int kk = k % 2 ? d - k : k;
        int e = sgn(spec.sign);
        num = P(q, kk * (d - kk) / 2);
        for (int i = (d - kk + 1) / 2; i <= (d - 1) / 2; ++i) num *= P(q, 2 * i) - 1;
        den = 2 * (P(q, kk / 2) - e);
        for (int i = 1; i <= kk / 2 - 1; ++i) den *= P(q, 2 * i) - 1;
        return exact_div(num, den);
      }
      break;
    }
  }
  throw Error(Errc::NoFormula, spec.describe());
}

namespace {

int ceil_log(const BigInt& x, const BigInt& base) {
  // smallest c >= 0 with base^c >= x
  BigInt p = 1;
  int c = 0;
  while (p < x) {
    p *= base;
    ++c;
  }
  return c;
}

int floor_log2(const BigInt& x) {
  int c = -1;
  BigInt p = 1;
  while (p <= x) {
    p *= 2;
    ++c;
  }
  return c;
}

}  // namespace

BigInt bound_function(BoundKind kind, const BoundParams& p) {
  switch (kind) {
    case BoundKind::HLM_i:
    case BoundKind::HLM_ii:
    case BoundKind::HLM_iii: {
      if (p.k < 1 || p.d < p.k) throw Error(Errc::BadParams, "HLM needs 1 <= k <= d");
      int add = kind == BoundKind::HLM_i ? 10 : kind == BoundKind::HLM_ii ? 11 : 5;
      return p.d / p.k + add;
    }
    case BoundKind::Partitions:
      if (p.s < 2 || p.t < 1) throw Error(Errc::BadParams, "partitions need s >= 2, t >= 1");
      return ceil_log(p.t, p.s) + 3;
    case BoundKind::Diagonal:
      if (p.T < 2 || p.kk < 1) throw Error(Errc::BadParams, "diagonal needs |T| >= 2, k >= 1");
      return ceil_log(p.kk, p.T) + 2;
    case BoundKind::ProductAction: {
      if (p.m < 2 || p.pk < 1 || p.bH < 0) throw Error(Errc::BadParams, "product action needs m >= 2, k >= 1");
      int num = ceil_log(p.pk, 2);
      int den = floor_log2(p.m);
      return (num + den - 1) / den + p.bH;
    }
  }
  throw Error(Errc::BadParams, "unknown bound");
}

void dump_orbit(const Orbit& O, std::ostream& os) {
  os << "# " << O.spec.describe() << " degree " << O.degree() << "\n";
  for (std::uint32_t i = 0; i < O.degree(); ++i) os << i << " " << O.point_str(i) << "\n";
  for (std::size_t g = 0; g < O.perms.gens.size(); ++g) {
    os << "g" << g;
    for (auto x : O.perms.gens[g]) os << " " << x;
    os << "\n";
  }
}

}  // namespace bw
