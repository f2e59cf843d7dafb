// Acceptance runner: one [PASS]/[FAIL] line per criterion, details indented
// below failing lines.  Arguments select criteria by number (default: all).

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "basewright/actions.hpp"
#include "basewright/audit.hpp"
#include "basewright/errors.hpp"
#include "properties.hpp"

using namespace bw;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
  void fail(const std::string& d) {
    pass = false;
    details.push_back(d);
  }
};

std::string label(Family f, int d, int q) {
  return std::string(family_name(f)) + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
}

Outcome table_suite() {
  struct Inst { const char* table; Family f; int d, q; Sign s; };
  using F = Family;
  const Sign N = Sign::None, P = Sign::Plus, M = Sign::Minus;
  const std::vector<Inst> list = {
      {"1", F::GU, 3, 2, N}, {"1", F::GU, 4, 2, N}, {"1", F::GU, 5, 2, N}, {"1", F::GU, 4, 3, N},
      {"1", F::Sp, 4, 2, N}, {"1", F::Sp, 4, 3, N}, {"1", F::Sp, 6, 2, N}, {"1", F::GOplus, 6, 2, N},
      {"1", F::GOminus, 8, 2, N}, {"1", F::GOcirc, 7, 3, N},

      {"2", F::GL, 4, 2, N}, {"2", F::GL, 4, 3, N}, {"2", F::GL, 5, 2, N}, {"2", F::GL, 6, 2, N},
      {"2", F::GU, 4, 2, N}, {"2", F::Sp, 4, 2, N}, {"2", F::Sp, 4, 3, N}, {"2", F::Sp, 6, 2, N},
      {"2", F::GU, 6, 2, N}, {"2", F::GU, 5, 2, N}, {"2", F::GU, 8, 2, N}, {"2", F::Sp, 8, 2, N},
      {"2", F::GOplus, 8, 2, N}, {"2", F::GOcirc, 9, 3, N}, {"2", F::GOminus, 8, 2, N},

      {"n1", F::GU, 3, 2, N}, {"n1", F::GU, 3, 3, N}, {"n1", F::GU, 4, 2, N},
      {"n1", F::GOcirc, 5, 3, P}, {"n1", F::GOcirc, 5, 3, M}, {"n1", F::GOplus, 6, 2, P},
      {"n1", F::GOplus, 6, 3, P}, {"n1", F::GOminus, 6, 2, P}, {"n1", F::GOminus, 6, 3, P},
      {"n1", F::GOcirc, 7, 3, P}, {"n1", F::GOcirc, 7, 3, M},

      {"3", F::Sp, 8, 2, N}, {"3", F::Sp, 8, 3, N}, {"3", F::GU, 8, 2, N}, {"3", F::GOplus, 8, 2, N},
      {"3", F::GOplus, 8, 3, N}, {"3", F::GOminus, 8, 2, N}, {"3", F::GOcirc, 9, 3, N},
      {"4", F::GOplus, 8, 2, N}, {"4", F::GOplus, 8, 3, N}, {"4", F::GOminus, 8, 2, N},
      {"4", F::GOcirc, 9, 3, N},

      {"6", F::GOcirc, 7, 2, P}, {"6", F::GOcirc, 7, 2, M}, {"6", F::GOcirc, 7, 4, P},
      {"6", F::GOcirc, 7, 4, M}, {"6", F::GOcirc, 9, 2, P}, {"6", F::GOcirc, 9, 2, M},
  };
  Outcome o;
  int good = 0;
  for (const auto& c : list) {
    std::string name = std::string("table ") + c.table + " " + label(c.f, c.d, c.q) +
                       (c.s == Sign::None ? "" : std::string(" ") + sign_name(c.s));
    try {
      auto r = verify_table(c.table, c.f, c.d, c.q, c.s);
      if (r.pass) {
        ++good;
      } else {
        o.fail(name + " [" + r.row + "]: n=" + r.n + ", stabilizer order " + r.stabilizer_order +
               (r.error.empty() ? "" : ", " + r.error));
      }
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  o.summary = std::to_string(good) + "/" + std::to_string(list.size()) +
              " table instances give a trivial pointwise stabilizer";
  return o;
}

// exact minimal base; for tiny degrees the naive oracle's answer goes in `naive`
int exact_on(const ActionSpec& a, std::size_t& n, int& naive) {
  Orbit O = a.kind == ActionKind::Partitions ? partition_action(a.ell, a.s, a.t) : enumerate_orbit(a);
  n = O.degree();
  naive = n <= 16 ? props::naive_min_base(O.perms) : -1;
  return exact_min_base(schreier_sims(O.perms)).size;
}

Outcome exact_equalities() {
  struct Want { ActionSpec spec; std::size_t n; int b; };
  std::vector<Want> list = {
      {ActionSpec::coset(3, 2, Sign::Minus), 28, 6},
      {ActionSpec::nonsingular1(Family::GOplus, 6, 2), 0, 5},
      {ActionSpec::nonsingular1(Family::GOminus, 6, 2), 0, 5},
      {ActionSpec::nonsingular1(Family::GOplus, 8, 2), 0, 7},
      {ActionSpec::nonsingular1(Family::GOminus, 8, 2), 0, 7},
      {ActionSpec::partitions(6, 3, 2), 15, 3},
  };
  // both square classes of non-degenerate 1-spaces in the minus-type 4-space over GF(3)
  for (Sign s : {Sign::Plus, Sign::Minus}) list.push_back({ActionSpec::nondeg(Family::GOminus, 4, 3, 1, s), 0, 4});
  Outcome o;
  for (const auto& w : list) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 0;
    try {
      int naive = -1;
      int b = exact_on(w.spec, n, naive);
      double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      bool ok = b == w.b && (w.n == 0 || n == w.n) && sec < 120 && (naive < 0 || naive == b);
      std::string line = w.spec.describe() + ": n=" + std::to_string(n) + ", b=" + std::to_string(b) +
                         (naive >= 0 ? ", naive oracle " + std::to_string(naive) : std::string()) +
                         " (want " + std::to_string(w.b) + ")";
      if (!ok) o.fail(line);
    } catch (const std::exception& e) {
      o.fail(w.spec.describe() + ": " + e.what());
    }
  }
  o.summary = std::to_string(list.size() - o.details.size()) + "/" + std::to_string(list.size()) +
              " exact minimal base sizes as expected";
  return o;
}

Outcome mathieu(const SweepSummary& sweep) {
  Outcome o;
  const std::pair<const char*, int> want[] = {{"M12", 5}, {"M23", 6}, {"M24", 7}};
  std::string got;
  for (auto [name, b] : want) {
    try {
      MathieuRow r = mathieu_row(name);
      if (r.order != r.expected_order) o.fail(std::string(name) + ": order " + r.order + " vs file " + r.expected_order);
      if (r.greedy > b) o.fail(std::string(name) + ": greedy base " + std::to_string(r.greedy));
      if (r.lower != b) o.fail(std::string(name) + ": order bound " + std::to_string(r.lower));
      got += std::string(got.empty() ? "" : ", ") + name + " b=" + std::to_string(std::max(r.greedy, r.lower));
    } catch (const std::exception& e) {
      o.fail(std::string(name) + ": " + e.what());
    }
  }
  if (sweep.strict_violators != std::vector<std::string>{"M24 on 24 points"}) {
    std::string v;
    for (const auto& s : sweep.strict_violators) v += " [" + s + "]";
    o.fail("strict violators in the sweep:" + (v.empty() ? std::string(" none") : v));
  }
  o.summary = got + "; M24 is the only row above ceil(log n)+1";
  return o;
}

Outcome witnesses() {
  Outcome o;
  int total = 0, bad = 0;
  const std::tuple<Family, int, int> groups[] = {
      {Family::GOplus, 6, 2}, {Family::GOminus, 6, 2}, {Family::GOplus, 6, 3},
      {Family::GOminus, 6, 3}, {Family::GOplus, 8, 2}, {Family::GOminus, 8, 2}};
  std::uint64_t seed = 1;
  for (auto [f, d, q] : groups) {
    try {
      WitnessTrials T = witness_trials(f, d, q, 100, seed++);
      total += T.count;
      bad += T.failures;
      if (T.failures) o.fail(T.group + ": " + std::to_string(T.failures) + " failures");
    } catch (const std::exception& e) {
      o.fail(label(f, d, q) + ": " + e.what());
    }
  }
  o.summary = std::to_string(total) + " random tuples, " + std::to_string(bad) + " witness failures";
  return o;
}

Outcome degrees() {
  Outcome o;
  auto rows = audit_degrees(default_degree_suite());
  int equal = 0;
  for (const auto& r : rows) {
    if (r.equal) ++equal;
    else o.fail(r.instance + ": formula " + r.formula + ", enumerated " + r.enumerated + " " + r.error);
  }
  if (rows.size() < 20) o.fail("only " + std::to_string(rows.size()) + " instances");
  // the named degrees must all appear
  for (auto n : {"63", "35", "28", "15", "10"}) {
    bool seen = false;
    for (const auto& r : rows) seen = seen || r.enumerated == n;
    if (!seen) o.fail(std::string("no instance of degree ") + n);
  }
  int partition_35 = 0;
  for (const auto& r : rows) partition_35 += r.kind == "partitions" && r.enumerated == "35";
  if (!partition_35) o.fail("no partition instance of degree 35");
  o.summary = std::to_string(equal) + "/" + std::to_string(rows.size()) + " formula degrees equal enumeration";
  return o;
}

Outcome sweep_outcome(const SweepSummary& S) {
  Outcome o;
  int exc = 0;
  for (const auto& r : S.rows) {
    exc += r.exceptional;
    if (!r.determined) o.fail(r.instance + ": undetermined " + r.error);
    if (r.exceptional != r.expected_exceptional)
      o.fail(r.instance + ": exceptional=" + std::to_string(r.exceptional) + ", listed=" +
             std::to_string(r.expected_exceptional));
  }
  for (const auto& u : S.unexpected) o.fail("unexpected: " + u);
  if (!S.pass()) o.pass = false;
  o.summary = std::to_string(S.rows.size()) + " rows with n <= 2000, " + std::to_string(exc) +
              " with b >= log n + 1, all listed";
  return o;
}

Outcome properties() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& r : props::all(1)) {
    cases += r.cases;
    if (!r.pass) o.fail(r.summary());
  }
  o.summary = "6 property suites, " + std::to_string(cases) + " cases";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  auto want = [&](int c) { return only.empty() || only.count(c); };

  const char* names[] = {"", "table verification", "exact equalities", "Mathieu groups", "tightness witness",
                         "degree audit", "theorem sweep", "property suites"};

  SweepSummary sweep;
  double sweep_seconds = 0;
  if (want(3) || want(6)) {
    auto t0 = std::chrono::steady_clock::now();
    sweep = theorem_sweep(2000, 2000000);
    sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::vector<std::pair<int, std::function<Outcome()>>> crit = {
      {1, table_suite},
      {2, exact_equalities},
      {3, [&] { return mathieu(sweep); }},
      {4, witnesses},
      {5, degrees},
      {6, [&] { return sweep_outcome(sweep); }},
      {7, properties},
  };
  int failed = 0;
  for (auto& [id, fn] : crit) {
    if (!want(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (id == 6) sec += sweep_seconds;  // the sweep ran once, up front
    std::printf("[%s] %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, names[id], o.summary.c_str(), sec);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
