#pragma once

// Finite fields GF(p^f), q <= 16, in a polynomial basis.
// Elements are small integers: index = c_0 + c_1 p + ... + c_{f-1} p^{f-1},
// where c_i is the coefficient of X^i.  Integer order on indices is the
// enumeration order used by every scan in this library.

#include <cstdint>
#include <string>
#include <vector>

namespace bw {

using elt = std::uint8_t;

class Field {
 public:
  // GF(q).  Throws BadParams if q is not a prime power or exceeds the cap.
  static const Field& gf(int q);
  // GF(q^2) with designated subfield GF(q); used by the unitary groups.
  static const Field& gf_sq(int q);

  static constexpr int kMaxOrder = 16;

  int p() const { return p_; }
  int f() const { return f_; }
  int order() const { return order_; }
  // Subfield order for quadratic contexts, else 0.
  int sub_order() const { return sub_; }
  bool quadratic() const { return sub_ != 0; }
  const std::vector<int>& modulus() const { return modulus_; }

  elt add(elt a, elt b) const { return add_[a * order_ + b]; }
  elt sub(elt a, elt b) const { return add_[a * order_ + neg_[b]]; }
  elt mul(elt a, elt b) const { return mul_[a * order_ + b]; }
  elt neg(elt a) const { return neg_[a]; }
  elt inv(elt a) const;
  elt div(elt a, elt b) const { return mul(a, inv(b)); }
  elt pow(elt a, long long e) const;
  // Image of an integer in the prime field.
  elt from_int(long long n) const;

  // x -> x^q on GF(q^2).  NotQuadraticExtension otherwise.
  elt conj(elt a) const;
  // x + x^q.
  elt trace(elt a) const;
  bool in_subfield(elt a) const;
  // First mu in enumeration order with trace(mu) == target.  With nonzero
  // set, mu = 0 is skipped.
  elt solve_trace(elt target, bool nonzero = false) const;

  // First zeta with X^2 + X + zeta irreducible.  Not for GF(q^2) contexts.
  elt find_zeta() const;
  bool is_square(elt a) const;
  // Some b with b*b == a (a must be a square).
  elt sqrt(elt a) const;
  // Smallest element of multiplicative order |F|-1.
  elt primitive() const;

  std::vector<int> coords(elt a) const;
  std::string str(elt a) const;

 private:
  Field(int p, int f, int sub);

  int p_, f_, order_, sub_;
  std::vector<int> modulus_;  // coefficients c_0..c_f, c_f = 1
  std::vector<elt> add_, mul_, neg_, inv_;
  std::vector<elt> frob_q_;  // x^sub, quadratic contexts
  std::vector<std::uint8_t> square_;
};

// Value wrapper carrying its context; checks that operands agree.
class FieldElement {
 public:
  FieldElement(const Field& F, elt v);
  const Field& ctx() const { return *F_; }
  elt value() const { return v_; }
  std::vector<int> coeffs() const { return F_->coords(v_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement conj() const;
  FieldElement trace() const;
  bool is_square() const;
  bool operator==(const FieldElement& o) const { return F_ == o.F_ && v_ == o.v_; }

 private:
  void same(const FieldElement& o) const;
  const Field* F_;
  elt v_;
};

}  // namespace bw
