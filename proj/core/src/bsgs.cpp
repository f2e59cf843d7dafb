#include "basewright/bsgs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "basewright/errors.hpp"

namespace bw {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = std::uint32_t(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

bool perm_valid(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (auto x : a) {
    if (x >= a.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::string perm_cycles(const Perm& a) {
  std::ostringstream os;
  std::vector<char> seen(a.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    any = true;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      os << (first ? "" : ",") << j + 1;
      first = false;
      j = a[j];
    }
    os << ")";
  }
  if (!any) os << "()";
  return os.str();
}

Perm parse_cycles(const std::string& text, std::size_t n) {
  Perm p = perm_identity(n);
  std::vector<char> used(n, 0);
  std::size_t i = 0;
  auto bad = [&](const std::string& why) { throw Error(Errc::BadInput, why + " in '" + text + "'"); };
  while (i < text.size()) {
    if (std::isspace((unsigned char)text[i])) { ++i; continue; }
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::vector<std::size_t> cyc;
    std::string num;
    for (;; ++i) {
      if (i >= text.size()) bad("unterminated cycle");
      char c = text[i];
      if (std::isdigit((unsigned char)c)) { num += c; continue; }
      if (c == ',' || c == ')' || std::isspace((unsigned char)c)) {
        if (!num.empty()) {
          std::size_t v = std::stoul(num);
          if (v < 1 || v > n) bad("point out of range");
          if (used[v - 1]) bad("point " + num + " repeats");
          used[v - 1] = 1;
          cyc.push_back(v - 1);
          num.clear();
        }
        if (c == ')') { ++i; break; }
        continue;
      }
      bad("unexpected character");
    }
    for (std::size_t t = 0; t < cyc.size(); ++t) p[cyc[t]] = std::uint32_t(cyc[(t + 1) % cyc.size()]);
  }
  if (!perm_valid(p)) bad("not a bijection");
  return p;
}

std::vector<std::vector<std::uint32_t>> orbits(std::size_t n, const std::vector<Perm>& gens) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.push_back({std::uint32_t(s)});
    comp[s] = id;
    for (std::size_t h = 0; h < out[id].size(); ++h) {
      std::uint32_t x = out[id][h];
      for (auto& g : gens)
        if (comp[g[x]] < 0) {
          comp[g[x]] = id;
          out[id].push_back(g[x]);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (auto& L : levels) r *= L.orbit.size();
  return r;
}

std::vector<std::uint32_t> StabChain::base() const {
  std::vector<std::uint32_t> b;
  for (auto& L : levels) b.push_back(L.base);
  return b;
}

std::vector<Perm> StabChain::generators() const {
  std::vector<Perm> g;
  if (levels.empty()) return g;
  for (int i : levels[0].gens) g.push_back(sgens[i]);
  return g;
}

std::size_t StabChain::sift(Perm& g) const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Level& L = levels[i];
    std::uint32_t pt = g[L.base];
    if (L.sv[pt] == -2) return i;
    while (L.sv[pt] >= 0) {
      int s = L.sv[pt];
      g = perm_mul(g, sinv[s]);
      pt = sinv[s][pt];
    }
  }
  return levels.size();
}

bool StabChain::contains(const Perm& g) const {
  Perm h = g;
  sift(h);
  return perm_is_identity(h);
}

Perm StabChain::transversal(std::size_t level, std::uint32_t pt) const {
  const Level& L = levels[level];
  if (L.sv[pt] == -2) throw Error(Errc::BadInput, "point outside basic orbit");
  std::vector<int> word;
  while (L.sv[pt] >= 0) {
    int s = L.sv[pt];
    word.push_back(s);
    pt = sinv[s][pt];
  }
  Perm u = perm_identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = perm_mul(u, sgens[*it]);
  return u;
}

int StabChain::add_gen(const Perm& g) {
  sgens.push_back(g);
  sinv.push_back(perm_inv(g));
  return int(sgens.size()) - 1;
}

void StabChain::new_level(std::uint32_t point) {
  Level L;
  L.base = point;
  L.sv.assign(n, -2);
  L.sv[point] = -1;
  L.orbit.push_back(point);
  levels.push_back(std::move(L));
}

void StabChain::attach(std::size_t level, int gen) {
  Level& L = levels[level];
  L.gens.push_back(gen);
  // extend: the new gen from every known point, then close under all gens
  std::size_t old = L.orbit.size();
  const Perm& g = sgens[gen];
  for (std::size_t i = 0; i < old; ++i) {
    std::uint32_t y = g[L.orbit[i]];
    if (L.sv[y] == -2) {
      L.sv[y] = gen;
      L.orbit.push_back(y);
    }
  }
  for (std::size_t h = old; h < L.orbit.size(); ++h) {
    std::uint32_t x = L.orbit[h];
    for (int s : L.gens) {
      std::uint32_t y = sgens[s][x];
      if (L.sv[y] == -2) {
        L.sv[y] = s;
        L.orbit.push_back(y);
      }
    }
  }
}

namespace {

std::uint32_t first_moved(const Perm& g, const std::vector<std::uint32_t>& avoid) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i && std::find(avoid.begin(), avoid.end(), i) == avoid.end()) return std::uint32_t(i);
  return 0;
}

std::vector<std::uint32_t> dedupe(const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> r;
  for (auto x : v)
    if (std::find(r.begin(), r.end(), x) == r.end()) r.push_back(x);
  return r;
}

// place residue h, which fixes base points below `level`
void insert_residue(StabChain& C, const Perm& h, std::size_t level) {
  if (level == C.levels.size()) C.new_level(first_moved(h, C.base()));
  int id = C.add_gen(h);
  for (std::size_t l = 0; l <= level; ++l) C.attach(l, id);
}

}  // namespace

StabChain schreier_sims(const PermGroup& G, const std::vector<std::uint32_t>& prefix) {
  StabChain C;
  C.n = G.n;
  for (auto p : dedupe(prefix)) C.new_level(p);
  for (auto& g : G.gens) {
    if (perm_is_identity(g)) continue;
    Perm h = g;
    std::size_t j = C.sift(h);
    if (!perm_is_identity(h)) insert_residue(C, h, j);
  }
  // Holt's SCHREIERSIMS: complete levels from the top down
  std::size_t i = C.levels.size();
  while (i > 0) {
    std::size_t lev = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < C.levels[lev].orbit.size() && !restarted; ++oi) {
      std::uint32_t beta = C.levels[lev].orbit[oi];
      Perm ub = C.transversal(lev, beta);
      std::vector<int> gens = C.levels[lev].gens;
      for (int s : gens) {
        const Perm& g = C.sgens[s];
        Perm h = perm_mul(ub, g);
        Perm uinv = perm_inv(C.transversal(lev, g[beta]));
        h = perm_mul(h, uinv);
        if (perm_is_identity(h)) continue;
        // sift through the levels below lev
        std::size_t j = lev + 1;
        for (; j < C.levels.size(); ++j) {
          const Level& L = C.levels[j];
          std::uint32_t pt = h[L.base];
          if (L.sv[pt] == -2) break;
          while (L.sv[pt] >= 0) {
            int t = L.sv[pt];
            h = perm_mul(h, C.sinv[t]);
            pt = C.sinv[t][pt];
          }
        }
        if (perm_is_identity(h)) continue;
        insert_residue(C, h, j);
        i = j + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return C;
}

namespace {

class Randomizer {
 public:
  Randomizer(const std::vector<Perm>& gens, std::size_t n, std::uint64_t seed) : rng_(seed) {
    std::vector<Perm> g = gens;
    if (g.empty()) g.push_back(perm_identity(n));
    std::size_t k = std::max<std::size_t>(10, g.size());
    for (std::size_t i = 0; i < k; ++i) state_.push_back(g[i % g.size()]);
    acc_ = perm_identity(n);
    for (int i = 0; i < 50; ++i) next();
  }
  Perm next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t a = pick(rng_), b = pick(rng_);
    while (b == a && state_.size() > 1) b = pick(rng_);
    if (rng_() & 1)
      state_[a] = perm_mul(state_[a], state_[b]);
    else
      state_[a] = perm_mul(state_[b], state_[a]);
    acc_ = perm_mul(acc_, state_[a]);
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Perm> state_;
  Perm acc_;
};

}  // namespace

StabChain random_schreier_sims(const PermGroup& G, const BigInt& order,
                               const std::vector<std::uint32_t>& prefix, std::uint64_t seed) {
  StabChain C;
  C.n = G.n;
  for (auto p : dedupe(prefix)) C.new_level(p);
  std::vector<Perm> gens;
  for (auto& g : G.gens)
    if (!perm_is_identity(g)) gens.push_back(g);
  for (auto& g : gens) {
    if (C.order() >= order) break;
    Perm h = g;
    std::size_t j = C.sift(h);
    if (!perm_is_identity(h)) insert_residue(C, h, j);
  }
  if (C.order() >= order) {
    if (C.order() != order) throw Error(Errc::OrderMismatch, "group exceeds the stated order");
    return C;
  }
  Randomizer R(gens, G.n, seed);
  int stall = 0;
  const int kStall = 80;
  while (C.order() < order) {
    Perm h = R.next();
    std::size_t j = C.sift(h);
    if (perm_is_identity(h)) {
      if (++stall > kStall) throw Error(Errc::Incomplete, "random Schreier-Sims stalled below the stated order");
      continue;
    }
    stall = 0;
    insert_residue(C, h, j);
  }
  if (C.order() != order) throw Error(Errc::OrderMismatch, "group exceeds the stated order");
  return C;
}

StabChain pointwise_stabilizer(const StabChain& C, const std::vector<std::uint32_t>& points) {
  auto pts = dedupe(points);
  PermGroup G;
  G.n = C.n;
  G.gens = C.generators();
  StabChain full = random_schreier_sims(G, C.order(), pts, 0x5eed ^ pts.size());
  StabChain S;
  S.n = C.n;
  S.sgens = full.sgens;
  S.sinv = full.sinv;
  S.levels.assign(full.levels.begin() + pts.size(), full.levels.end());
  return S;
}

bool is_base(const StabChain& C, const std::vector<std::uint32_t>& points) {
  return pointwise_stabilizer(C, points).order() == 1;
}

int order_lower_bound(const BigInt& order, std::uint64_t n) {
  if (order <= 1) return 0;
  if (n < 2) throw Error(Errc::BadParams, "degree below 2");
  BigInt p = 1;
  int b = 0;
  while (p < order) {
    p *= n;
    ++b;
  }
  return b;
}

namespace {

struct OrbitInfo {
  std::vector<std::vector<std::uint32_t>> orbs;  // nontrivial, largest first, ties by least point
  std::size_t maxorb = 1;
};

OrbitInfo nontrivial_orbits(const StabChain& C) {
  OrbitInfo I;
  for (auto& o : orbits(C.n, C.generators()))
    if (o.size() > 1) I.orbs.push_back(o);
  std::stable_sort(I.orbs.begin(), I.orbs.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  if (!I.orbs.empty()) I.maxorb = I.orbs[0].size();
  return I;
}

StabChain child(const StabChain& C, std::uint32_t pt) { return pointwise_stabilizer(C, {pt}); }

struct Search {
  std::uint64_t budget, nodes = 0;
  std::vector<std::uint32_t> path, found;
  // points whose subtrees are exhausted at some ancestor: any base through
  // one of them was already seen up to conjugacy
  std::vector<char> done;

  // is there a base of H of size <= s - depth extending path?
  bool dfs(const StabChain& H, int depth, int s) {
    if (++nodes > budget) throw Error(Errc::BudgetExceeded, "node budget");
    BigInt ord = H.order();
    if (ord == 1) {
      found = path;
      return true;
    }
    if (depth >= s) return false;
    OrbitInfo I = nontrivial_orbits(H);
    if (depth + order_lower_bound(ord, I.maxorb) > s) return false;
    std::vector<std::uint32_t> marked;
    bool ok = false;
    for (auto& o : I.orbs) {
      bool skip = false;
      for (auto x : o)
        if (done[x]) { skip = true; break; }
      if (skip) continue;
      std::uint32_t rep = o[0];
      path.push_back(rep);
      StabChain K = child(H, rep);
      ok = dfs(K, depth + 1, s);
      path.pop_back();
      if (ok) break;
      for (auto x : o) {
        done[x] = 1;
        marked.push_back(x);
      }
    }
    for (auto x : marked) done[x] = 0;
    return ok;
  }
};

}  // namespace

std::vector<std::uint32_t> greedy_base(const StabChain& C) {
  std::vector<std::uint32_t> b;
  StabChain H = C;
  while (H.order() > 1) {
    OrbitInfo I = nontrivial_orbits(H);
    std::uint32_t pt = I.orbs[0][0];
    b.push_back(pt);
    H = child(H, pt);
  }
  return b;
}

MinBase exact_min_base(const StabChain& C, std::optional<int> cutoff, std::uint64_t budget,
                       MinBase* interval) {
  MinBase R;
  auto greedy = greedy_base(C);
  R.upper = int(greedy.size());
  R.base = greedy;
  OrbitInfo I = nontrivial_orbits(C);
  R.lower = order_lower_bound(C.order(), std::max<std::size_t>(I.maxorb, 2));
  if (C.order() == 1) R.lower = 0;
  int stop = R.upper - 1;
  if (cutoff) stop = std::min(stop, *cutoff);
  Search S;
  S.budget = budget;
  S.done.assign(C.n, 0);
  try {
    for (int s = R.lower; s <= stop; ++s) {
      if (S.dfs(C, 0, s)) {
        R.upper = int(S.found.size());
        R.lower = s;
        R.base = S.found;
        break;
      }
      R.lower = s + 1;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    R.nodes = S.nodes;
    if (interval) *interval = R;
    throw Error(Errc::BudgetExceeded, "minimal base in [" + std::to_string(R.lower) + ", " +
                                          std::to_string(R.upper) + "]");
  }
  R.nodes = S.nodes;
  if (R.lower > R.upper) R.lower = R.upper;
  // lower < upper only when a cutoff stopped the deepening early
  R.size = R.upper;
  if (interval) *interval = R;
  return R;
}

}  // namespace bw
