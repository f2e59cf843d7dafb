#include <doctest.h>

#include <random>
#include <set>

#include "basewright/bsgs.hpp"
#include "basewright/errors.hpp"

using namespace bw;

namespace {

std::set<Perm> closure(const PermGroup& G) {
  std::set<Perm> seen{perm_identity(G.n)};
  std::vector<Perm> todo{perm_identity(G.n)};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : G.gens) {
      Perm h = perm_mul(p, g);
      if (seen.insert(h).second) todo.push_back(h);
    }
  }
  return seen;
}

PermGroup group(std::size_t n, const std::vector<std::string>& cycles) {
  PermGroup G;
  G.n = n;
  for (const auto& c : cycles) G.gens.push_back(parse_cycles(c, n));
  return G;
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm a = parse_cycles("(1,2,3)", 4), b = parse_cycles("(3,4)", 4);
  Perm ab = perm_mul(a, b);  // a first: 1->2, 2->3->4, 3->1, 4->3
  CHECK(ab == Perm{1, 3, 0, 2});
  CHECK(perm_cycles(ab) == "(1,2,4,3)");
  CHECK(perm_is_identity(perm_mul(ab, perm_inv(ab))));
  CHECK(perm_cycles(perm_identity(5)) == "()");
  CHECK(parse_cycles(perm_cycles(ab), 4) == ab);
  CHECK_THROWS_AS(parse_cycles("(1,2,2)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(1,5)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), Error);
  CHECK_FALSE(perm_valid(Perm{0, 0, 1}));
}

TEST_CASE("orbits") {
  auto O = orbits(7, {parse_cycles("(1,3)(5,6)", 7), parse_cycles("(3,4)", 7)});
  CHECK(O == std::vector<std::vector<std::uint32_t>>{{0, 2, 3}, {1}, {4, 5}, {6}});
}

TEST_CASE("Schreier-Sims orders against closure") {
  std::vector<PermGroup> gs = {
      group(5, {"(1,2)", "(1,2,3,4,5)"}),
      group(6, {"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}),
      group(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"}),
      group(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)", "(1,2)(3,6)"}),
      group(9, {"(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"}),
  };
  std::mt19937_64 rng(9);
  for (const auto& G : gs) {
    auto E = closure(G);
    StabChain C = schreier_sims(G);
    CHECK(C.order() == BigInt(E.size()));
    StabChain R = random_schreier_sims(G, BigInt(E.size()));
    CHECK(R.order() == BigInt(E.size()));
    CHECK_THROWS_AS(random_schreier_sims(G, BigInt(E.size()) * 2), Error);
    for (int t = 0; t < 50; ++t) {
      Perm p = perm_identity(G.n);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(C.contains(p) == (E.count(p) == 1));
    }
    for (const auto& g : E) CHECK(C.contains(g));
  }
}

TEST_CASE("prefix base and pointwise stabilizers") {
  PermGroup S5 = group(5, {"(1,2)", "(1,2,3,4,5)"});
  StabChain C = schreier_sims(S5, {4, 2});
  CHECK(C.base()[0] == 4);
  CHECK(C.base()[1] == 2);
  CHECK(pointwise_stabilizer(C, {0}).order() == 24);
  CHECK(pointwise_stabilizer(C, {0, 1, 2}).order() == 2);
  CHECK(is_base(C, {0, 1, 2, 3}));
  CHECK_FALSE(is_base(C, {0, 1, 2}));
}

TEST_CASE("minimal bases of familiar groups") {
  // Sym(n) natural: n-1;  cyclic regular: 1;  dihedral on n >= 3: 2
  for (int n = 3; n <= 7; ++n) {
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? "," : ")");
    StabChain Sym = schreier_sims(group(n, {"(1,2)", cyc}));
    CHECK(exact_min_base(Sym).size == n - 1);
    CHECK(exact_min_base(schreier_sims(group(n, {cyc}))).size == 1);
  }
  StabChain D8 = schreier_sims(group(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"}));
  MinBase M = exact_min_base(D8);
  CHECK(M.size == 2);
  CHECK(is_base(D8, M.base));
  CHECK(greedy_base(D8).size() >= 2);
}

TEST_CASE("order lower bound") {
  CHECK(order_lower_bound(BigInt(1), 5) == 0);
  CHECK(order_lower_bound(BigInt(120), 5) == 3);  // 5^2 < 120 <= 5^3
  CHECK(order_lower_bound(BigInt(125), 5) == 3);
  CHECK(order_lower_bound(BigInt(126), 5) == 4);
}

TEST_CASE("budget exhaustion reports an interval") {
  std::string cyc = "(1,2,3,4,5,6,7,8,9,10)";
  StabChain Sym = schreier_sims(group(10, {"(1,2)", cyc}));
  // greedy equals the true size here, so force a search with a cutoff below it
  MinBase I;
  auto R = exact_min_base(Sym, 5, 100000000ULL, &I);
  CHECK(R.lower <= R.upper);
  CHECK(R.upper == 9);
  PermGroup big = group(12, {"(1,2)(3,4)", "(1,3,5,7,9,11)(2,4,6,8,10,12)", "(1,2,3)"});
  StabChain B = schreier_sims(big);
  if (greedy_base(B).size() > std::size_t(order_lower_bound(B.order(), 12))) {
    CHECK_THROWS_AS(exact_min_base(B, std::nullopt, 1, &I), Error);
    CHECK(I.lower <= I.upper);
  }
}
