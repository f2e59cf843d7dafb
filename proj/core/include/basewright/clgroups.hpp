#pragma once

#include <string>
#include <vector>

#include "basewright/bigint.hpp"
#include "basewright/bsgs.hpp"
#include "basewright/forms.hpp"

namespace bw {

enum class Family { GL, GU, Sp, GOplus, GOminus, GOcirc };

const char* family_name(Family f);
// accepts GL, GU, Sp, GO+, GO-, GOo / GOplus, GOminus, GOcirc (case-insensitive)
Family parse_family(const std::string& s);
bool is_orthogonal(Family f);
Sign family_sign(Family f);

struct MatrixGroup {
  Family family = Family::GL;
  int d = 0;
  int q = 0;
  const Field* F = nullptr;  // GF(q), or GF(q^2) for GU
  ClassicalForm form;
  std::vector<Matrix> gens;
  BigInt order;
  // degree of the certifying action and its kind ("vectors" or "points")
  std::string certified_on;
  std::size_t certified_degree = 0;

  const Field& field() const { return *F; }
  std::string name() const;
};

// Inadmissible for parameters outside the supported range
void check_admissible(Family f, int d, int q);
BigInt order_formula(Family f, int d, int q);

// Built once per (family, d, q); generators are certified by a Schreier-Sims
// order computation on nonzero vectors (or 1-spaces when that set is too big).
const MatrixGroup& build_group(Family f, int d, int q);

// all scalar matrices in the group
std::vector<Matrix> scalars(const MatrixGroup& G);
std::size_t scalar_count(const MatrixGroup& G);

// Permutation image on nonzero vectors (index = big-endian base-|F| value - 1)
Perm vector_perm(const Field& F, const Matrix& g);
// Permutation image on 1-spaces; points are normalized vectors in index order
struct PointSet {
  std::vector<Vec> pts;
  std::vector<std::int32_t> index_of;  // vec_index -> point, -1 for non-normalized
};
const PointSet& projective_points(const Field& F, int d);
Perm point_perm(const Field& F, const PointSet& P, const Matrix& g);
std::uint32_t point_of(const Field& F, const PointSet& P, const Vec& v);

// q even: GO_{2m+1}(q) with the standard degenerate form, and the map to
// Sp_{2m}(q) acting on V / rad V (drop the x coordinate).
struct SpOrthoModel {
  const MatrixGroup* go = nullptr;
  ClassicalForm sp_form;
  Matrix to_symplectic(const Matrix& g) const;
};
SpOrthoModel sp_to_odd_orthogonal(int m, int q);

std::string data_dir();
PermGroup load_permgroup(const std::string& name);
// expected order recorded in the data file header
BigInt permgroup_expected_order(const std::string& name);

}  // namespace bw
