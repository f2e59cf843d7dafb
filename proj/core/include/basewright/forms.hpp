#pragma once

#include <string>
#include <vector>

#include "basewright/linalg.hpp"

namespace bw {

enum class FormKind { Linear, Unitary, Symplectic, Quadratic };
enum class Sign { None, Plus, Minus, Circ };

const char* kind_name(FormKind k);
const char* sign_name(Sign s);
// "+" / "-" / "o" / "" ; also accepts "plus", "minus", "circ", "0"
Sign parse_sign(const std::string& s);

// Standard forms and labelled bases: e_1..e_a, f_1..f_a, then x (odd d, or
// minus type), then y (minus type).
struct ClassicalForm {
  FormKind kind = FormKind::Linear;
  Sign sign = Sign::None;
  int d = 0;
  int a = 0;  // number of hyperbolic pairs in the basis
  const Field* F = nullptr;
  Matrix gram;
  Matrix qm;  // upper triangular: qm(i,i) = Q(b_i), qm(i,j) = B(b_i,b_j)
  elt zeta = 0;
  std::vector<std::string> labels;

  const Field& field() const { return *F; }
  bool quadratic() const { return kind == FormKind::Quadratic; }
  int e(int i) const { return i - 1; }
  int f(int i) const { return a + i - 1; }
  int x() const { return 2 * a; }
  int y() const { return 2 * a + 1; }
  Vec zero() const { return Vec(d, 0); }
  Vec basis_vec(int idx) const { return unit(d, idx); }

  // linear in u, conjugate-linear in v for the unitary kind
  elt B(const Vec& u, const Vec& v) const;
  // KindMismatch unless quadratic
  elt Q(const Vec& u) const;
};

ClassicalForm standard_form(FormKind kind, Sign sign, int d, const Field& F);

Subspace perp(const ClassicalForm& F, const Subspace& U);
Subspace radical(const ClassicalForm& F, const Subspace& U);

struct Tag {
  enum Kind { TotallySingular, Nondegenerate, NonsingularOne, DegenerateOther };
  Kind kind = TotallySingular;
  Sign sign = Sign::None;
  // odd-dimensional non-degenerate subspaces, q odd: sign of the perp when it
  // has even dimension, otherwise square class of the discriminant (+1/-1)
  int aux = 0;
  bool operator==(const Tag& o) const { return kind == o.kind && sign == o.sign && aux == o.aux; }
  bool operator!=(const Tag& o) const { return !(*this == o); }
};
std::string tag_name(const Tag& t);

Tag classify(const ClassicalForm& F, const Subspace& U);
// Witt index of a non-degenerate quadratic restriction, by greedy search
int witt_index(const ClassicalForm& F, const Subspace& U);
// q odd: + iff (-1)^{k/2} det(B|U) is a square
Sign discriminant_sign(const ClassicalForm& F, const Subspace& U);

Matrix gram_of(const ClassicalForm& F, const std::vector<Vec>& basis);

bool is_isometry(const ClassicalForm& F, const Matrix& g);

enum class PairKind { Hyperbolic, Elliptic };
bool pair_check(const ClassicalForm& F, const Vec& u, const Vec& v, PairKind kind);

std::vector<std::string> standard_labels(FormKind kind, Sign sign, int d);

}  // namespace bw
