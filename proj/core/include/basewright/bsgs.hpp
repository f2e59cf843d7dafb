#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basewright/bigint.hpp"

namespace bw {

using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
// apply a, then b
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
bool perm_is_identity(const Perm& a);
bool perm_valid(const Perm& a);
// 1-based disjoint-cycle notation, "()" for the identity
std::string perm_cycles(const Perm& a);
// parses "(1,2,3)(4,5)"; BadInput on malformed text or a non-bijection
Perm parse_cycles(const std::string& text, std::size_t n);

struct PermGroup {
  std::size_t n = 0;
  std::vector<Perm> gens;
  std::string name;
};

// orbits of <gens> on {0..n-1}, each sorted, ordered by least element
std::vector<std::vector<std::uint32_t>> orbits(std::size_t n, const std::vector<Perm>& gens);

struct Level {
  std::uint32_t base = 0;
  std::vector<int> gens;     // indices into StabChain::sgens
  std::vector<int> sv;       // -1 root, -2 absent, else index of the gen that reached the point
  std::vector<std::uint32_t> orbit;
};

class StabChain {
 public:
  std::size_t n = 0;
  std::vector<Perm> sgens, sinv;
  std::vector<Level> levels;

  BigInt order() const;
  std::vector<std::uint32_t> base() const;
  // strong generators of the whole group (level 0), or all gens when empty
  std::vector<Perm> generators() const;
  // residue after sifting; returns the level index where sifting stopped
  // (levels.size() when it passed every level)
  std::size_t sift(Perm& g) const;
  bool contains(const Perm& g) const;
  // u with base^u == pt
  Perm transversal(std::size_t level, std::uint32_t pt) const;
  bool in_orbit(std::size_t level, std::uint32_t pt) const { return levels[level].sv[pt] != -2; }

  // internal, used by the builders
  int add_gen(const Perm& g);
  void attach(std::size_t level, int gen);
  void new_level(std::uint32_t point);
};

// Deterministic Schreier-Sims; base starts with prefix, then smallest moved points.
StabChain schreier_sims(const PermGroup& G, const std::vector<std::uint32_t>& prefix = {});

// Random Schreier-Sims against a known order.  The result is certified
// because the product of basic orbit lengths never exceeds |<gens>|.
// Throws Incomplete when `order` is not reached.
StabChain random_schreier_sims(const PermGroup& G, const BigInt& order,
                               const std::vector<std::uint32_t>& prefix = {},
                               std::uint64_t seed = 1);

StabChain pointwise_stabilizer(const StabChain& C, const std::vector<std::uint32_t>& points);
bool is_base(const StabChain& C, const std::vector<std::uint32_t>& points);
std::vector<std::uint32_t> greedy_base(const StabChain& C);
// smallest b with n^b >= order
int order_lower_bound(const BigInt& order, std::uint64_t n);

struct MinBase {
  int size = 0;
  std::vector<std::uint32_t> base;
  int lower = 0;
  int upper = 0;
  std::uint64_t nodes = 0;
};

// Iterative deepening over stabilizer-orbit representatives.  BudgetExceeded
// carries the interval; `interval` receives it too.
MinBase exact_min_base(const StabChain& C, std::optional<int> cutoff = std::nullopt,
                       std::uint64_t budget = 100000000ULL, MinBase* interval = nullptr);

}  // namespace bw
