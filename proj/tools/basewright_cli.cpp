// basewright: table verification, base sizes, degree audits and the sweep.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "basewright/audit.hpp"
#include "basewright/errors.hpp"

using namespace bw;

namespace {

struct Opts {
  std::string family = "GL";
  int d = 0, q = 0, k = 1;
  std::string sign;
  std::string action = "singular";
  int m = 0, s = 0, t = 0;
  std::string table;
  std::string method = "auto";
  std::uint64_t max_degree = 2000;
  std::uint64_t budget = 2000000;
  int threads = 0;
  std::string json_out;
  std::string seed_point;
  std::string dump;
  std::string group;
  int count = 100;
  std::uint64_t rng_seed = 1;
  bool enumerate = false;
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::BadInput, "cannot write " + path);
  f << text << "\n";
}

ActionSpec spec_from(const Opts& o) {
  ActionKind kind = parse_action(o.action);
  if (kind == ActionKind::Partitions) {
    if (o.s < 2 || o.t < 2) throw Error(Errc::BadParams, "--s and --t are required for partitions");
    return ActionSpec::partitions(o.s * o.t, o.s, o.t);
  }
  if (kind == ActionKind::Coset) {
    int m = o.m ? o.m : o.d / 2;
    if (m < 1 || o.q < 2) throw Error(Errc::BadParams, "--m (or --d = 2m) and --q are required for coset");
    return ActionSpec::coset(m, o.q, o.sign.empty() ? Sign::Minus : parse_sign(o.sign));
  }
  if (o.d < 2 || o.q < 2) throw Error(Errc::BadParams, "--d and --q are required");
  Family f = parse_family(o.family);
  switch (kind) {
    case ActionKind::Singular: return ActionSpec::singular(f, o.d, o.q, o.k);
    case ActionKind::Nondeg: return ActionSpec::nondeg(f, o.d, o.q, o.k, o.sign.empty() ? Sign::None : parse_sign(o.sign));
    case ActionKind::Nonsingular1: return ActionSpec::nonsingular1(f, o.d, o.q);
    default: break;
  }
  throw Error(Errc::BadParams, "unsupported action");
}

Subspace parse_seed(const ActionSpec& spec, const std::string& text) {
  std::vector<Vec> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    Vec v;
    std::stringstream rs(row);
    std::string e;
    while (std::getline(rs, e, ',')) v.push_back(elt(std::stoi(e)));
    if (int(v.size()) != spec.d) throw Error(Errc::BadInput, "--seed-point rows need " + std::to_string(spec.d) + " entries");
    rows.push_back(v);
  }
  const Field& K = acting_group(spec).field();
  for (auto& r : rows)
    for (elt c : r)
      if (c >= K.order()) throw Error(Errc::BadInput, "--seed-point entry outside the field");
  return rref(K, rows, spec.d);
}

int cmd_degree(const Opts& o) {
  ActionSpec spec = spec_from(o);
  std::cout << spec.describe() << "\n";
  BigInt n = degree_formula(spec);
  std::cout << "formula: " << n << "\n";
  if (o.enumerate || !o.dump.empty() || !o.seed_point.empty()) {
    Orbit O = o.seed_point.empty() ? enumerate_orbit(spec) : enumerate_orbit(spec, parse_seed(spec, o.seed_point));
    std::cout << "enumerated: " << O.degree() << "\n";
    if (!o.dump.empty()) {
      std::ostringstream os;
      dump_orbit(O, os);
      write_out(o.dump, os.str());
    }
    if (BigInt(O.degree()) != n) return 1;
  }
  return 0;
}

int cmd_verify(const Opts& o) {
  Family f = parse_family(o.family);
  Sign sg = o.sign.empty() ? Sign::None : parse_sign(o.sign);
  BaseCandidate B = table_base(o.table, f, o.d, o.q, sg);
  if (!o.dump.empty()) write_out(o.dump, to_json(B));
  VerificationReport r = verify_candidate(B, o.method);
  std::cout << "table " << r.table << " [" << r.row << "] " << B.spec.describe() << ": n=" << r.n << " size=" << r.candidate_size
            << " stabilizer=" << r.stabilizer_order << " via " << r.method << " -> " << (r.pass ? "pass" : "FAIL") << "\n";
  if (!r.error.empty()) std::cout << "  " << r.error << "\n";
  write_out(o.json_out, to_json(r));
  return r.pass ? 0 : 1;
}

void print_base(const std::string& what, const StabChain& C, std::uint64_t n, std::uint64_t budget, int shift) {
  int lo0 = order_lower_bound(C.order(), n) + shift;
  int greedy = int(greedy_base(C).size()) + shift;
  MinBase M;
  bool exact = true;
  try {
    M = exact_min_base(C, std::nullopt, budget, &M);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    exact = false;
  }
  int lo = M.lower + shift, up = M.upper + shift;
  std::string lower_why = lo == lo0 ? "via |G|>n^" + std::to_string(lo - 1) : "via search";
  std::string upper_why = up == greedy ? "via greedy" : "via search";
  std::cout << what << ": ";
  if (exact) std::cout << up;
  else std::cout << "[" << lo << "," << up << "]";
  std::cout << " (lower=" << lo << " " << lower_why << ", upper=" << up << " " << upper_why << ")\n";
}

int cmd_base_size(const Opts& o) {
  if (!o.group.empty()) {
    std::string g = o.group;
    if (g.rfind("AGL", 0) == 0 || g.rfind("GL", 0) == 0) {
      if (o.d < 1 || o.q < 2) throw Error(Errc::BadParams, "--d and --q are required for " + g);
      bool aff = g.rfind("AGL", 0) == 0;
      const MatrixGroup& G = build_group(Family::GL, o.d, o.q);
      PermGroup P;
      std::uint64_t n = 1;
      for (int i = 0; i < o.d; ++i) n *= std::uint64_t(G.field().order());
      P.n = n - 1;
      for (auto& x : G.gens) P.gens.push_back(vector_perm(G.field(), x));
      StabChain C = random_schreier_sims(P, G.order);
      print_base((aff ? "AGL(" : "GL(") + std::to_string(o.d) + "," + std::to_string(o.q) + ")", C, aff ? n : n - 1, o.budget,
                 aff ? 1 : 0);
      return 0;
    }
    PermGroup P = load_permgroup(g);
    StabChain C = schreier_sims(P);
    print_base(g, C, P.n, o.budget, 0);
    return 0;
  }
  ActionSpec spec = spec_from(o);
  Orbit O = o.seed_point.empty() ? enumerate_orbit(spec) : enumerate_orbit(spec, parse_seed(spec, o.seed_point));
  if (!o.dump.empty()) {
    std::ostringstream os;
    dump_orbit(O, os);
    write_out(o.dump, os.str());
  }
  StabChain C = random_schreier_sims(O.perms, O.image_order());
  print_base(spec.describe() + " (n=" + std::to_string(O.degree()) + ")", C, O.degree(), o.budget, 0);
  return 0;
}

int cmd_witness(const Opts& o) {
  WitnessTrials T = witness_trials(parse_family(o.family), o.d, o.q, o.count, o.rng_seed);
  std::cout << T.group << ": " << T.count << " tuples, " << T.failures << " failures;";
  for (auto& [k, v] : T.cases) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  return T.failures ? 1 : 0;
}

int cmd_sweep(const Opts& o) {
  SweepOptions so;
  so.max_degree = o.max_degree;
  so.budget = o.budget;
  so.threads = o.threads;
  SweepSummary S = theorem_sweep(so);
  for (auto& r : S.rows) {
    if (!r.exceptional && r.within_bound && r.determined) continue;
    std::cout << (r.exceptional ? "exceptional " : "") << (r.determined ? "" : "undetermined ") << r.instance << ": n=" << r.n
              << " b=" << (r.b_exact ? std::to_string(*r.b_exact) : "[" + std::to_string(r.b_lower) + "," + std::to_string(r.b_upper) + "]")
              << " ceil(log n)+1=" << r.ceil_log_n_plus_1 << (r.expected_exceptional ? " (listed)" : "") << "\n";
  }
  std::cout << S.rows.size() << " rows; strict violators:";
  for (auto& v : S.strict_violators) std::cout << " " << v;
  std::cout << "; unexpected:";
  for (auto& v : S.unexpected) std::cout << " " << v;
  std::cout << "\n" << (S.pass() ? "pass" : "FAIL") << "\n";
  write_out(o.json_out, to_json(S));
  return S.pass() ? 0 : 1;
}

int cmd_audit_degrees(const Opts& o) {
  auto rows = audit_degrees(default_degree_suite());
  bool ok = true;
  for (auto& r : rows) {
    std::cout << (r.equal ? "ok   " : "FAIL ") << r.instance << ": formula " << r.formula << ", enumerated " << r.enumerated;
    if (!r.error.empty()) std::cout << " (" << r.error << ")";
    std::cout << "\n";
    ok = ok && r.equal;
  }
  write_out(o.json_out, to_json(rows));
  return ok ? 0 : 1;
}

bool usage_error(Errc c) {
  switch (c) {
    case Errc::BadParams:
    case Errc::BadInput:
    case Errc::BadShape:
    case Errc::Inadmissible:
    case Errc::OddQ:
    case Errc::KindMismatch:
    case Errc::NoFormula:
    case Errc::MissingData:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"basewright: base sizes of primitive groups"};
  app.require_subcommand(1);
  Opts o;
  auto inst = [&](CLI::App* c) {
    c->add_option("--family", o.family, "GL, GU, Sp, GO+, GO-, GOo");
    c->add_option("--d", o.d, "dimension");
    c->add_option("--q", o.q, "field order");
    c->add_option("--k", o.k, "subspace dimension");
    c->add_option("--sign", o.sign, "+, - or o");
    c->add_option("--action", o.action, "singular, nondeg, nonsingular1, coset, partitions");
    c->add_option("--m", o.m, "coset action: Sp(2m,q)");
    c->add_option("--s", o.s, "partitions: number of blocks");
    c->add_option("--t", o.t, "partitions: block size");
    c->add_option("--seed-point", o.seed_point, "orbit seed, rows of field indices: 1,0,0;0,1,0");
    c->add_option("--dump", o.dump, "write orbit or candidate to FILE ('-' for stdout)");
  };
  auto* degree = app.add_subcommand("degree", "degree formula, optionally checked by enumeration");
  inst(degree);
  degree->add_flag("--enumerate", o.enumerate, "also enumerate the orbit");

  auto* verify = app.add_subcommand("verify-table", "verify a table base candidate");
  inst(verify);
  verify->add_option("--table", o.table, "1, 2, n1, 3, 4 or 6")->required();
  verify->add_option("--method", o.method, "auto, orbit or commutant");
  verify->add_option("--json", o.json_out, "write the report to OUT");

  auto* base = app.add_subcommand("base-size", "exact minimal base size");
  inst(base);
  base->add_option("--group", o.group, "M11, M12, M23, M24, GL or AGL (with --d, --q)");
  base->add_option("--budget", o.budget, "search node budget");

  auto* wit = app.add_subcommand("witness", "tightness witnesses for random (d-2)-tuples of 1-spaces");
  inst(wit);
  wit->add_option("--count", o.count, "number of tuples");
  wit->add_option("--rng-seed", o.rng_seed, "random seed");

  auto* sweep = app.add_subcommand("sweep", "main theorem sweep");
  sweep->add_option("--max-degree", o.max_degree, "largest degree");
  sweep->add_option("--budget", o.budget, "search node budget per instance");
  sweep->add_option("--threads", o.threads, "worker threads (0: all cores)");
  sweep->add_option("--json", o.json_out, "write rows to OUT");

  auto* audit = app.add_subcommand("audit-degrees", "degree formulas against enumeration");
  audit->add_option("--json", o.json_out, "write rows to OUT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*degree) return cmd_degree(o);
    if (*verify) return cmd_verify(o);
    if (*base) return cmd_base_size(o);
    if (*wit) return cmd_witness(o);
    if (*sweep) return cmd_sweep(o);
    if (*audit) return cmd_audit_degrees(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
