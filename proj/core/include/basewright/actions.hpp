#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "basewright/bsgs.hpp"
#include "basewright/clgroups.hpp"

namespace bw {

enum class ActionKind { Singular, Nondeg, Nonsingular1, Coset, Partitions };

const char* action_name(ActionKind k);
ActionKind parse_action(const std::string& s);

struct ActionSpec {
  ActionKind kind = ActionKind::Singular;
  Family family = Family::GL;
  int d = 0, q = 0, k = 1;
  // Nondeg: type of the subspace (even k, quadratic), or for odd k over odd q
  // the sign of the perp (d odd) / square class of the discriminant (d even).
  // Coset: type of the 2m-spaces.
  Sign sign = Sign::None;
  int m = 0;                 // coset
  int ell = 0, s = 0, t = 0; // partitions

  static ActionSpec singular(Family f, int d, int q, int k);
  static ActionSpec nondeg(Family f, int d, int q, int k, Sign sign = Sign::None);
  static ActionSpec nonsingular1(Family f, int d, int q);
  static ActionSpec coset(int m, int q, Sign sign);
  static ActionSpec partitions(int ell, int s, int t);

  bool subspace_kind() const { return kind != ActionKind::Partitions; }
  std::string describe() const;
};

// the group acting (GO_{2m+1}(q) for cosets); not for partitions
const MatrixGroup& acting_group(const ActionSpec& spec);
Tag expected_tag(const ActionSpec& spec);
Subspace default_seed(const ActionSpec& spec);

struct U128Hash {
  std::size_t operator()(u128 x) const {
    std::uint64_t lo = std::uint64_t(x), hi = std::uint64_t(x >> 64);
    return std::size_t(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x632be59bd9b4e019ULL + (lo << 6)));
  }
};

using Partition = std::vector<std::vector<int>>;

struct Orbit {
  ActionSpec spec;
  const MatrixGroup* group = nullptr;
  std::vector<Subspace> points;
  std::vector<Partition> partitions;
  PermGroup perms;
  std::unordered_map<u128, std::uint32_t, U128Hash> index;
  std::unordered_map<std::string, std::uint32_t> pindex;

  std::size_t degree() const { return perms.n; }
  std::optional<std::uint32_t> find(const Subspace& U) const;
  std::optional<std::uint32_t> find(const Partition& P) const;
  std::string point_str(std::uint32_t i) const;
  // order of the permutation image
  BigInt image_order() const;
};

constexpr std::size_t kDefaultOrbitCap = 1000000;

Orbit enumerate_orbit(const ActionSpec& spec, const Subspace& seed, std::size_t cap = kDefaultOrbitCap);
Orbit enumerate_orbit(const ActionSpec& spec, std::size_t cap = kDefaultOrbitCap);
Orbit partition_action(int ell, int s, int t);
// canonical form: blocks sorted internally and by least element
Partition canonical_partition(Partition P);

// NoFormula for kinds without a tabulated count
BigInt degree_formula(const ActionSpec& spec);

enum class BoundKind { HLM_i, HLM_ii, HLM_iii, Partitions, Diagonal, ProductAction };
struct BoundParams {
  int d = 0, k = 0;        // HLM
  int s = 0, t = 0;        // partitions
  BigInt kk = 0, T = 0;    // diagonal: k and |T|
  BigInt pk = 0;           // product action: k
  int m = 0, bH = 0;       // product action
};
BigInt bound_function(BoundKind kind, const BoundParams& p);

// write the orbit as text: points, then generator images
void dump_orbit(const Orbit& O, std::ostream& os);

}  // namespace bw
