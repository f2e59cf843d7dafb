#include "basewright/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "basewright/errors.hpp"

namespace bw {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string to_str(const BigInt& x) { return x.str(); }

StabChain certified_chain(const PermGroup& P, const BigInt& order) {
  try {
    return random_schreier_sims(P, order);
  } catch (const Error& e) {
    if (e.code() != Errc::Incomplete) throw;
  }
  StabChain C = schreier_sims(P);
  if (C.order() != order)
    throw Error(Errc::OrderMismatch, P.name + ": image order " + to_str(C.order()) + ", expected " + to_str(order));
  return C;
}

}  // namespace

std::optional<BigInt> commutant_stabilizer_order(const MatrixGroup& G, const std::vector<Subspace>& pts,
                                                 std::uint64_t max_elements) {
  const Field& K = G.field();
  int d = G.d, dd = d * d;
  // an isometry fixing each U also fixes perps, meets and joins
  std::vector<Subspace> lat;
  auto push = [&](const Subspace& U) {
    if (U.k == 0 || U.k == d) return false;
    if (std::find(lat.begin(), lat.end(), U) != lat.end()) return false;
    lat.push_back(U);
    return true;
  };
  for (auto& U : pts) push(U);
  for (bool grew = true; grew && lat.size() < 400;) {
    grew = false;
    std::size_t m = lat.size();
    for (std::size_t i = 0; i < m && lat.size() < 400; ++i) {
      if (G.family != Family::GL) grew |= push(perp(G.form, lat[i]));
      for (std::size_t j = 0; j < i && lat.size() < 400; ++j) {
        grew |= push(meet(K, lat[i], lat[j]));
        grew |= push(join(K, lat[i], lat[j]));
      }
    }
  }
  std::vector<Vec> eqs;
  for (auto& U : lat) {
    auto ub = U.basis();
    Subspace H = kernel(K, ub, d);
    for (auto& u : ub)
      for (auto& h : H.basis()) {
        Vec e(dd, 0);
        for (int a = 0; a < d; ++a)
          if (u[a])
            for (int b = 0; b < d; ++b) e[a * d + b] = K.mul(u[a], h[b]);
        eqs.push_back(std::move(e));
      }
  }
  Subspace A = kernel(K, eqs, dd);
  int r = A.k;
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) {
    total *= std::uint64_t(K.order());
    if (total > max_elements) return std::nullopt;
  }
  std::vector<Vec> basis = A.basis();
  std::vector<int> c(r, 0);
  std::uint64_t count = 0;
  Matrix M(d);
  for (std::uint64_t it = 0; it < total; ++it) {
    std::fill(M.a.begin(), M.a.end(), elt(0));
    for (int i = 0; i < r; ++i)
      if (c[i])
        for (int j = 0; j < dd; ++j)
          if (basis[i][j]) M.a[j] = K.add(M.a[j], K.mul(elt(c[i]), basis[i][j]));
    if (is_isometry(G.form, M)) ++count;
    for (int i = 0; i < r; ++i) {
      if (++c[i] < K.order()) break;
      c[i] = 0;
    }
  }
  return BigInt(count) / scalar_count(G);
}

VerificationReport verify_candidate(const BaseCandidate& B, const std::string& method) {
  auto t0 = Clock::now();
  VerificationReport R;
  const ActionSpec& s = B.spec;
  R.table = B.provenance.table;
  R.row = B.provenance.row;
  R.family = s.kind == ActionKind::Coset ? "Sp" : family_name(s.family);
  R.d = s.kind == ActionKind::Coset ? 2 * s.m : s.d;
  R.q = s.q;
  R.k = s.k;
  R.sign = sign_name(s.sign);
  R.action = action_name(s.kind);
  R.candidate_size = B.points.size();
  for (auto& [k, v] : B.provenance.chosen_params) R.chosen_params.emplace_back(k, v);
  R.notes = B.provenance.notes;
  const MatrixGroup& G = acting_group(s);
  for (auto& U : B.points) R.points.push_back(str(G.field(), U));
  BigInt n = degree_formula(s);
  R.n = to_str(n);
  std::string m = method;
  if (m == "auto") m = n <= kOrbitMethodLimit ? "orbit" : "commutant";
  R.method = m;
  try {
    if (m == "orbit") {
      Orbit O = enumerate_orbit(s, B.points[0]);
      if (BigInt(O.degree()) != n) R.notes.push_back("orbit size " + std::to_string(O.degree()) + " differs from formula");
      R.n = std::to_string(O.degree());
      std::vector<std::uint32_t> idx;
      for (std::size_t i = 0; i < B.points.size(); ++i) {
        auto f = O.find(B.points[i]);
        if (!f) throw Error(Errc::SeedTagMismatch, "candidate point " + std::to_string(i) + " is not in the orbit");
        idx.push_back(*f);
      }
      StabChain C = certified_chain(O.perms, O.image_order());
      BigInt st = pointwise_stabilizer(C, idx).order();
      R.stabilizer_order = to_str(st);
      R.pass = st == 1;
    } else if (m == "commutant") {
      auto st = commutant_stabilizer_order(G, B.points);
      if (!st) throw Error(Errc::BudgetExceeded, "stabilizer algebra too large to list");
      R.stabilizer_order = to_str(*st);
      R.pass = *st == 1;
    } else {
      throw Error(Errc::BadParams, "unknown method '" + m + "'");
    }
  } catch (const Error& e) {
    R.pass = false;
    R.error = e.what();
  }
  R.seconds = since(t0);
  return R;
}

VerificationReport verify_table(const std::string& table, Family f, int d, int q, Sign sign, const std::string& method) {
  return verify_candidate(table_base(table, f, d, q, sign), method);
}

std::uint64_t ceil_log2(std::uint64_t n) {
  std::uint64_t c = 0;
  while ((std::uint64_t(1) << c) < n) ++c;
  return c;
}

bool at_least_log_plus_one(int b, std::uint64_t n) {
  if (b <= 0) return false;
  if (b - 1 >= 63) return true;
  return (std::uint64_t(1) << (b - 1)) >= n;
}

namespace {

struct Instance {
  std::string label, group, category, action;
  bool expected = false;
  // one of these
  std::optional<ActionSpec> spec;
  std::string mathieu;
  int affine_d = 0, affine_p = 0;
  std::uint64_t n = 0;
};

std::vector<Instance> sweep_catalog(const SweepOptions& opt) {
  std::vector<Instance> out;
  auto add_spec = [&](const ActionSpec& s, const std::string& group, const std::string& cat, bool expected) {
    BigInt n;
    try {
      n = degree_formula(s);
    } catch (const Error&) {
      return;
    }
    if (n > opt.max_degree || n < 2) return;
    Instance I;
    I.spec = s;
    I.n = std::uint64_t(n);
    I.label = s.describe();
    I.group = group;
    I.category = cat;
    I.action = action_name(s.kind);
    I.expected = expected;
    out.push_back(I);
  };
  const std::vector<int> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  auto gname = [](Family f, int d, int q) {
    return std::string(family_name(f)) + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
  };
  auto smallest = [&](const ActionSpec& s) {
    try {
      return degree_formula(s);
    } catch (const Error&) {
      return BigInt(0);
    }
  };
  if (opt.include_classical) {
    for (int q : qs) {
      for (int d = 3;; ++d) {
        if (smallest(ActionSpec::singular(Family::GL, d, q, 1)) > opt.max_degree) break;
        for (int k = 1; 2 * k <= d; ++k) add_spec(ActionSpec::singular(Family::GL, d, q, k), gname(Family::GL, d, q), "classical", false);
      }
      for (int d = 4;; d += 2) {
        if (smallest(ActionSpec::singular(Family::Sp, d, q, 1)) > opt.max_degree) break;
        for (int k = 1; 2 * k <= d; ++k) add_spec(ActionSpec::singular(Family::Sp, d, q, k), gname(Family::Sp, d, q), "classical", false);
        for (int k = 2; 2 * k < d; k += 2)
          add_spec(ActionSpec::nondeg(Family::Sp, d, q, k, Sign::None), gname(Family::Sp, d, q), "classical", false);
      }
      if (q <= 4) {
        for (int d = 3;; ++d) {
          if (smallest(ActionSpec::singular(Family::GU, d, q, 1)) > opt.max_degree) break;
          for (int k = 1; 2 * k <= d; ++k) add_spec(ActionSpec::singular(Family::GU, d, q, k), gname(Family::GU, d, q), "classical", false);
          for (int k = 1; 2 * k < d; ++k)
            add_spec(ActionSpec::nondeg(Family::GU, d, q, k, Sign::None), gname(Family::GU, d, q), "classical", false);
        }
      }
      for (Family f : {Family::GOplus, Family::GOminus}) {
        for (int d = 6;; d += 2) {
          if (smallest(ActionSpec::singular(f, d, q, 1)) > opt.max_degree) break;
          for (int k = 1; k <= d / 2 - 1; ++k) add_spec(ActionSpec::singular(f, d, q, k), gname(f, d, q), "classical", false);
          if (q % 2 == 0) add_spec(ActionSpec::nonsingular1(f, d, q), gname(f, d, q), "classical", false);
          for (int k = 1; 2 * k < d; ++k) {
            if (k % 2 && q % 2 == 0) continue;
            for (Sign s : {Sign::Plus, Sign::Minus})
              add_spec(ActionSpec::nondeg(f, d, q, k, s), gname(f, d, q), "classical", false);
          }
        }
      }
      if (q % 2) {
        for (int d = 5;; d += 2) {
          if (smallest(ActionSpec::singular(Family::GOcirc, d, q, 1)) > opt.max_degree) break;
          for (int k = 1; 2 * k < d; ++k) {
            add_spec(ActionSpec::singular(Family::GOcirc, d, q, k), gname(Family::GOcirc, d, q), "classical", false);
            for (Sign s : {Sign::Plus, Sign::Minus})
              add_spec(ActionSpec::nondeg(Family::GOcirc, d, q, k, s), gname(Family::GOcirc, d, q), "classical", false);
          }
        }
      }
    }
  }
  // Sp_{2m}(q), q even, on cosets of GO^{+-}; Sp_4(2) is Sym(6) on 6 points
  for (int q : {2, 4, 8, 16})
    for (int m = q == 2 ? 3 : 2;; ++m) {
      if (smallest(ActionSpec::coset(m, q, Sign::Minus)) > opt.max_degree) break;
      for (Sign s : {Sign::Plus, Sign::Minus})
        add_spec(ActionSpec::coset(m, q, s), "Sp(" + std::to_string(2 * m) + "," + std::to_string(q) + ")", "coset",
                 q == 2 && s == Sign::Minus);
    }
  for (int ell = 5; ell <= 64; ++ell)
    for (int s = 2; s <= ell / 2; ++s) {
      if (ell % s) continue;
      int t = ell / s;
      if (t < 2) continue;
      add_spec(ActionSpec::partitions(ell, s, t), "Sym(" + std::to_string(ell) + ")", "partitions", false);
    }
  for (int p : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t n = std::uint64_t(p);
    for (int d = 2;; ++d) {
      n *= std::uint64_t(p);
      if (n > opt.max_degree || d > 10) break;
      if (p == 2 && d == 2) continue;  // Sym(4)
      if (p > 16) break;
      Instance I;
      I.affine_d = d;
      I.affine_p = p;
      I.n = n;
      I.group = "AGL(" + std::to_string(d) + "," + std::to_string(p) + ")";
      I.label = I.group + " on " + std::to_string(n) + " points";
      I.category = "affine";
      I.action = "affine";
      I.expected = p == 2;
      out.push_back(I);
    }
  }
  for (std::string mname : {"M11", "M12", "M23", "M24"}) {
    Instance I;
    I.mathieu = mname;
    I.group = mname;
    I.n = std::uint64_t(std::stoi(mname.substr(1)));
    if (I.n > opt.max_degree) continue;
    I.label = mname + " on " + std::to_string(I.n) + " points";
    I.category = "mathieu";
    I.action = "natural";
    I.expected = mname != "M11";
    out.push_back(I);
  }
  return out;
}

SweepRow run_instance(const Instance& I, std::uint64_t budget) {
  auto t0 = Clock::now();
  SweepRow R;
  R.instance = I.label;
  R.group = I.group;
  R.category = I.category;
  R.action = I.action;
  R.n = I.n;
  R.expected_exceptional = I.expected;
  R.ceil_log_n_plus_1 = int(ceil_log2(I.n)) + 1;
  try {
    StabChain C;
    int shift = 0;
    if (I.spec) {
      Orbit O = enumerate_orbit(*I.spec);
      if (O.degree() != I.n) throw Error(Errc::OrderMismatch, "orbit size differs from the degree formula");
      C = certified_chain(O.perms, O.image_order());
    } else if (!I.mathieu.empty()) {
      PermGroup P = load_permgroup(I.mathieu);
      C = schreier_sims(P);
    } else {
      const MatrixGroup& G = build_group(Family::GL, I.affine_d, I.affine_p);
      PermGroup P;
      P.n = I.n - 1;
      P.name = I.group;
      for (auto& g : G.gens) P.gens.push_back(vector_perm(G.field(), g));
      C = certified_chain(P, G.order);
      shift = 1;  // translations: the zero vector is the first base point
    }
    R.order = to_str(C.order());
    MinBase M;
    try {
      M = exact_min_base(C, std::nullopt, budget, &M);
      R.b_exact = M.size + shift;
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
    }
    R.b_upper = M.upper + shift;
    R.b_lower = M.lower + shift;
    if (R.b_exact) R.b_lower = R.b_upper = *R.b_exact;
  } catch (const Error& e) {
    R.error = e.what();
    R.determined = false;
    R.seconds = since(t0);
    return R;
  }
  int cl = R.ceil_log_n_plus_1;
  if (R.b_upper <= cl) R.within_bound = true;
  else if (R.b_lower > cl) R.within_bound = false;
  else R.determined = false;
  if (!at_least_log_plus_one(R.b_upper, R.n)) R.exceptional = false;
  else if (at_least_log_plus_one(R.b_lower, R.n)) R.exceptional = true;
  else R.determined = false;
  R.seconds = since(t0);
  return R;
}

}  // namespace

bool SweepSummary::pass() const {
  bool m24 = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.group == "M24"; });
  std::vector<std::string> want;
  if (m24) want.push_back("M24 on 24 points");
  return all_determined && exceptional_matches && strict_violators == want;
}

SweepSummary theorem_sweep(const SweepOptions& opt) {
  auto cat = sweep_catalog(opt);
  SweepSummary S;
  S.rows.resize(cat.size());
  int threads = opt.threads > 0 ? opt.threads : int(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, int(cat.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cat.size();) S.rows[i] = run_instance(cat[i], opt.budget);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& r : S.rows) {
    if (!r.determined) S.all_determined = false;
    if (r.determined && !r.within_bound) {
      S.all_within_bound = false;
      S.strict_violators.push_back(r.instance);
    }
    if (r.determined && r.exceptional != r.expected_exceptional) {
      S.exceptional_matches = false;
      S.unexpected.push_back(r.instance);
    }
  }
  return S;
}

SweepSummary theorem_sweep(std::uint64_t max_degree, std::uint64_t budget) {
  SweepOptions o;
  o.max_degree = max_degree;
  o.budget = budget;
  return theorem_sweep(o);
}

std::vector<ActionSpec> default_degree_suite() {
  using S = ActionSpec;
  return {
      S::singular(Family::Sp, 6, 2, 1),          // 63
      S::singular(Family::GOplus, 6, 2, 1),      // 35
      S::coset(3, 2, Sign::Minus),               // 28
      S::coset(3, 2, Sign::Plus),                // 36
      S::partitions(6, 3, 2),                    // 15
      S::partitions(6, 2, 3),                    // 10
      S::partitions(8, 2, 4),                    // 35
      S::singular(Family::GL, 4, 2, 2),
      S::singular(Family::GL, 5, 3, 2),
      S::singular(Family::Sp, 6, 2, 3),
      S::singular(Family::Sp, 4, 3, 2),
      S::singular(Family::GU, 4, 2, 2),
      S::singular(Family::GU, 5, 2, 1),
      S::singular(Family::GOminus, 6, 2, 2),
      S::singular(Family::GOcirc, 7, 3, 2),
      S::singular(Family::GOplus, 8, 2, 2),
      S::nondeg(Family::Sp, 6, 2, 2, Sign::None),
      S::nondeg(Family::GU, 5, 2, 2, Sign::None),
      S::nondeg(Family::GU, 4, 3, 1, Sign::None),
      S::nondeg(Family::GOplus, 6, 2, 2, Sign::Plus),
      S::nondeg(Family::GOminus, 6, 2, 2, Sign::Minus),
      S::nondeg(Family::GOplus, 6, 3, 1, Sign::Plus),
      S::nondeg(Family::GOcirc, 5, 3, 2, Sign::Minus),
      S::nondeg(Family::GOcirc, 5, 3, 1, Sign::Plus),
      S::nondeg(Family::GOcirc, 7, 3, 3, Sign::Minus),
      S::nonsingular1(Family::GOplus, 6, 2),
      S::nonsingular1(Family::GOminus, 6, 2),
  };
}

std::vector<DegreeAuditRow> audit_degrees(const std::vector<ActionSpec>& instances) {
  std::vector<DegreeAuditRow> out;
  for (auto& s : instances) {
    DegreeAuditRow r;
    r.instance = s.describe();
    r.kind = action_name(s.kind);
    if (s.kind != ActionKind::Partitions && s.kind != ActionKind::Coset) r.kind += std::string(" ") + family_name(s.family);
    try {
      r.formula = to_str(degree_formula(s));
      r.enumerated = std::to_string(enumerate_orbit(s).degree());
      r.equal = r.formula == r.enumerated;
    } catch (const Error& e) {
      r.error = e.what();
    }
    out.push_back(r);
  }
  return out;
}

MathieuRow mathieu_row(const std::string& name) {
  MathieuRow r;
  r.name = name;
  PermGroup P = load_permgroup(name);
  StabChain C = schreier_sims(P);
  r.n = P.n;
  r.order = to_str(C.order());
  r.expected_order = to_str(permgroup_expected_order(name));
  r.greedy = int(greedy_base(C).size());
  r.lower = order_lower_bound(C.order(), P.n);
  r.ceil_log_n_plus_1 = int(ceil_log2(P.n)) + 1;
  return r;
}

WitnessTrials witness_trials(Family f, int d, int q, int count, std::uint64_t seed) {
  if (f != Family::GOplus && f != Family::GOminus) throw Error(Errc::BadParams, "witness needs GO+ or GO-");
  const MatrixGroup& G = build_group(f, d, q);
  const ClassicalForm& C = G.form;
  const Field& K = G.field();
  std::vector<Vec> pool;
  for (auto& v : projective_points(K, C.d).pts)
    if (C.Q(v) != 0) pool.push_back(v);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  WitnessTrials T;
  T.group = G.name();
  T.count = count;
  for (int it = 0; it < count; ++it) {
    std::vector<Subspace> sp;
    for (int i = 0; i < C.d - 2; ++i) sp.push_back(rref(K, {pool[pick(rng)]}, C.d));
    TightnessWitness w = tightness_witness_full(C, sp);
    bool ok = is_isometry(C, w.g) && !is_scalar(w.g);
    for (auto& U : sp) ok = ok && act(K, U, w.g) == U;
    T.cases[witness_case_name(w.kind)]++;
    if (!ok) ++T.failures;
  }
  return T;
}

}  // namespace bw
