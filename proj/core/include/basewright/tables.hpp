#pragma once

#include <map>
#include <string>
#include <vector>

#include "basewright/actions.hpp"

namespace bw {

struct Provenance {
  std::string table;  // "1", "2", "n1", "3", "4", "6"
  std::string row;
  int d = 0;
  int q = 0;
  Sign sign = Sign::None;
  std::map<std::string, std::string> chosen_params;
  std::vector<std::string> notes;
};

struct BaseCandidate {
  ActionSpec spec;
  std::vector<Subspace> points;
  Provenance provenance;
};

// singular 1-spaces
BaseCandidate table1_base(Family f, int d, int q);
// totally singular 2-spaces (2-spaces for GL)
BaseCandidate table2_base(Family f, int d, int q);
// non-degenerate 1-spaces (GU); orthogonal 1-spaces, where sign is the type
// of the perp for odd d and the square class of Q(v) (+ square) for even d
BaseCandidate table_n1_base(Family f, int d, int q, Sign sign = Sign::Plus);
// non-degenerate 2-spaces; sign picks Table 3 (+, or None for Sp/GU) or Table 4 (-)
BaseCandidate table3_table4_base(Family f, int d, int q, Sign sign = Sign::Plus);
// GO_{2m+1}(q), q even, on non-degenerate 2m-spaces of the given type
BaseCandidate table6_base(int m, int q, Sign sign);

// dispatch on a table id; "3" and "4" both go to table3_table4_base
BaseCandidate table_base(const std::string& table, Family f, int d, int q, Sign sign);
// sign used when the table id fixes it ("4" is minus, "3" plus)
Sign table_sign(const std::string& table, Family f, Sign requested);

// Orthonormal basis for the standard unitary form, rows v_1..v_d, found by a
// lexicographic Gram-Schmidt scan.
Matrix unitary_orthonormal_basis(const ClassicalForm& C);

std::string dump_candidate(const BaseCandidate& B);

// Tightness lemma: for d-2 one-spaces of an even-dimensional orthogonal
// space, a non-scalar isometry fixing each of them.
enum class WitnessCase { NondegenerateW, NonsingularRadical, Reflection, Shear };
const char* witness_case_name(WitnessCase c);
struct TightnessWitness {
  Matrix g;
  WitnessCase kind = WitnessCase::NondegenerateW;
  Subspace W;  // the (d-2)-space used
};
TightnessWitness tightness_witness_full(const ClassicalForm& F, const std::vector<Subspace>& spaces);
Matrix tightness_witness(const ClassicalForm& F, const std::vector<Subspace>& spaces);

}  // namespace bw
