#include "basewright/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "basewright/errors.hpp"

namespace bw {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MixedContext: return "MixedContext";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotQuadraticExtension: return "NotQuadraticExtension";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::OrbitTooLarge: return "OrbitTooLarge";
    case Errc::SeedTagMismatch: return "SeedTagMismatch";
    case Errc::NoFormula: return "NoFormula";
    case Errc::BadShape: return "BadShape";
    case Errc::BadParams: return "BadParams";
    case Errc::MissingData: return "MissingData";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::OddQ: return "OddQ";
    case Errc::BadInput: return "BadInput";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::Incomplete: return "Incomplete";
  }
  return "Error";
}

namespace {

bool prime_power(int q, int& p, int& f) {
  if (q < 2) return false;
  for (p = 2; p <= q; ++p)
    if (q % p == 0) break;
  f = 0;
  int r = q;
  while (r % p == 0) { r /= p; ++f; }
  return r == 1;
}

using Poly = std::vector<int>;  // low degree first

Poly poly_mod(Poly a, const Poly& m, int p) {
  int dm = int(m.size()) - 1;
  int inv_lead = 1;
  while ((inv_lead * m[dm]) % p != 1) ++inv_lead;
  for (int i = int(a.size()) - 1; i >= dm; --i) {
    int c = (a[i] * inv_lead) % p;
    if (!c) continue;
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(std::max(dm, 1));
  while (int(a.size()) < dm) a.push_back(0);
  return a;
}

bool is_zero(const Poly& a) {
  for (int c : a) if (c) return false;
  return true;
}

// exhaustive trial division by monic polynomials of degree 1..f/2
bool irreducible(const Poly& m, int p) {
  int f = int(m.size()) - 1;
  for (int deg = 1; 2 * deg <= f; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      Poly t(deg + 1);
      int r = idx;
      for (int i = 0; i < deg; ++i) { t[i] = r % p; r /= p; }
      t[deg] = 1;
      if (is_zero(poly_mod(m, t, p))) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(int p, int f) {
  if (f == 1) return {0, 1};
  int count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (int idx = 0; idx < count; ++idx) {
    Poly m(f + 1);
    int r = idx;
    for (int i = 0; i < f; ++i) { m[i] = r % p; r /= p; }
    m[f] = 1;
    if (irreducible(m, p)) return m;
  }
  throw Error(Errc::BadParams, "no irreducible polynomial");
}

}  // namespace

Field::Field(int p, int f, int sub) : p_(p), f_(f), order_(1), sub_(sub) {
  for (int i = 0; i < f; ++i) order_ *= p;
  modulus_ = lowest_irreducible(p, f);
  if (!irreducible(modulus_, p)) throw Error(Errc::BadParams, "reducible modulus");
  int n = order_;
  auto to_poly = [&](int a) {
    Poly r(f);
    for (int i = 0; i < f; ++i) { r[i] = a % p; a /= p; }
    return r;
  };
  auto from_poly = [&](const Poly& r) {
    int a = 0;
    for (int i = f - 1; i >= 0; --i) a = a * p + r[i];
    return a;
  };
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    Poly pa = to_poly(a);
    Poly na(f);
    for (int i = 0; i < f; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = elt(from_poly(na));
    for (int b = 0; b < n; ++b) {
      Poly pb = to_poly(b);
      Poly s(f);
      for (int i = 0; i < f; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * n + b] = elt(from_poly(s));
      Poly prod(2 * f - 1, 0);
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      mul_[a * n + b] = elt(from_poly(poly_mod(prod, modulus_, p)));
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (mul_[a * n + b] == 1) inv_[a] = elt(b);
  square_.assign(n, 0);
  for (int a = 0; a < n; ++a) square_[mul_[a * n + a]] = 1;
  if (sub_) {
    frob_q_.resize(n);
    for (int a = 0; a < n; ++a) frob_q_[a] = pow(elt(a), sub_);
  }
}

const Field& Field::gf(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p, f;
  if (q > kMaxOrder || !prime_power(q, p, f))
    throw Error(Errc::BadParams, "field order " + std::to_string(q));
  auto& slot = cache[q];
  slot.reset(new Field(p, f, 0));
  return *slot;
}

const Field& Field::gf_sq(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p, f;
  if (q * q > kMaxOrder || !prime_power(q, p, f))
    throw Error(Errc::BadParams, "field order " + std::to_string(q) + "^2");
  auto& slot = cache[q];
  slot.reset(new Field(p, 2 * f, q));
  return *slot;
}

elt Field::inv(elt a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0");
  return inv_[a];
}

elt Field::pow(elt a, long long e) const {
  if (e < 0) { a = inv(a); e = -e; }
  elt r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

elt Field::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return elt(r);
}

elt Field::conj(elt a) const {
  if (!sub_) throw Error(Errc::NotQuadraticExtension, "conj");
  return frob_q_[a];
}

elt Field::trace(elt a) const { return add(a, conj(a)); }

bool Field::in_subfield(elt a) const { return conj(a) == a; }

elt Field::solve_trace(elt target, bool nonzero) const {
  if (!sub_) throw Error(Errc::NotQuadraticExtension, "solve_trace");
  for (int a = nonzero ? 1 : 0; a < order_; ++a)
    if (trace(elt(a)) == target) return elt(a);
  throw Error(Errc::BadParams, "target outside subfield");
}

elt Field::find_zeta() const {
  if (sub_) throw Error(Errc::BadParams, "find_zeta on a quadratic context");
  for (int z = 0; z < order_; ++z) {
    bool root = false;
    for (int t = 0; t < order_ && !root; ++t)
      root = add(add(mul(elt(t), elt(t)), elt(t)), elt(z)) == 0;
    if (!root) return elt(z);
  }
  throw Error(Errc::BadParams, "no zeta");
}

bool Field::is_square(elt a) const { return square_[a] != 0; }

elt Field::sqrt(elt a) const {
  for (int b = 0; b < order_; ++b)
    if (mul(elt(b), elt(b)) == a) return elt(b);
  throw Error(Errc::BadParams, "not a square");
}

elt Field::primitive() const {
  for (int a = 1; a < order_; ++a) {
    int ord = 1;
    elt x = elt(a);
    while (x != 1) { x = mul(x, elt(a)); ++ord; }
    if (ord == order_ - 1) return elt(a);
  }
  return 1;
}

std::vector<int> Field::coords(elt a) const {
  std::vector<int> r(f_);
  int v = a;
  for (int i = 0; i < f_; ++i) { r[i] = v % p_; v /= p_; }
  return r;
}

std::string Field::str(elt a) const {
  if (f_ == 1) return std::to_string(int(a));
  auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (int i = f_ - 1; i >= 0; --i) {
    if (!c[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) { os << c[i]; continue; }
    if (c[i] != 1) os << c[i];
    os << "w";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement::FieldElement(const Field& F, elt v) : F_(&F), v_(v) {
  if (v >= F.order()) throw Error(Errc::BadInput, "element out of range");
}

void FieldElement::same(const FieldElement& o) const {
  if (F_ != o.F_) throw Error(Errc::MixedContext, "operands from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same(o);
  return {*F_, F_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same(o);
  return {*F_, F_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same(o);
  return {*F_, F_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {*F_, F_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {*F_, F_->inv(v_)}; }
FieldElement FieldElement::conj() const { return {*F_, F_->conj(v_)}; }
FieldElement FieldElement::trace() const { return {*F_, F_->trace(v_)}; }
bool FieldElement::is_square() const { return F_->is_square(v_); }

}  // namespace bw
