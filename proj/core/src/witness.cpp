#include "basewright/errors.hpp"
#include "basewright/tables.hpp"

namespace bw {

const char* witness_case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::NondegenerateW: return "nondegenerate-W";
    case WitnessCase::NonsingularRadical: return "nonsingular-radical";
    case WitnessCase::Reflection: return "reflection";
    case WitnessCase::Shear: return "shear";
  }
  return "?";
}

namespace {

// v -> v - B(v,z) Q(z)^{-1} z
Matrix reflection(const ClassicalForm& C, const Vec& z) {
  const Field& K = C.field();
  elt s = K.inv(C.Q(z));
  Matrix g(C.d);
  for (int i = 0; i < C.d; ++i) {
    Vec b = unit(C.d, i);
    Vec r = axpy(K, b, K.neg(K.mul(C.B(b, z), s)), z);
    for (int j = 0; j < C.d; ++j) g(i, j) = r[j];
  }
  return g;
}

// the linear map sending src[i] to dst[i]; src must be a basis
Matrix from_images(const Field& K, const std::vector<Vec>& src, const std::vector<Vec>& dst) {
  int d = int(src.size());
  Matrix S(d), T(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      S(i, j) = src[i][j];
      T(i, j) = dst[i][j];
    }
  return mul(K, inverse(K, S), T);
}

template <class Pred>
Vec scan(const ClassicalForm& C, Pred ok) {
  const Field& K = C.field();
  std::uint64_t N = 1;
  for (int i = 0; i < C.d; ++i) N *= K.order();
  for (std::uint64_t idx = 1; idx < N; ++idx) {
    Vec v = vec_from_index(K, idx, C.d);
    if (ok(v)) return v;
  }
  throw Error(Errc::Incomplete, "vector scan found nothing");
}

}  // namespace

TightnessWitness tightness_witness_full(const ClassicalForm& C, const std::vector<Subspace>& spaces) {
  if (!C.quadratic() || C.d % 2 || C.d < 6) throw Error(Errc::BadInput, "need an even-dimensional quadratic form, d >= 6");
  if (int(spaces.size()) != C.d - 2) throw Error(Errc::BadInput, "need exactly d-2 one-spaces");
  const Field& K = C.field();
  int d = C.d;
  std::vector<Vec> rows;
  for (auto& U : spaces) {
    if (U.k != 1 || U.d != d) throw Error(Errc::BadInput, "spaces must be one-dimensional");
    rows.push_back(U.row(0));
  }
  Subspace W = rref(K, rows, d);
  for (int i = 0; W.k < d - 2; ++i) {
    Vec u = unit(d, i);
    if (!contains(K, W, u)) {
      rows.push_back(u);
      W = rref(K, rows, d);
    }
  }
  TightnessWitness out;
  out.W = W;
  Subspace Wp = perp(C, W);
  Subspace U = meet(K, W, Wp);
  auto in_W = [&](const Vec& v) { return contains(K, W, v); };
  if (U.k == 0) {
    out.kind = WitnessCase::NondegenerateW;
    Vec z = scan(C, [&](const Vec& v) { return contains(K, Wp, v) && C.Q(v) != 0; });
    out.g = reflection(C, z);
    return out;
  }
  for (auto& u : span_points(K, U)) {
    if (C.Q(u) != 0) {
      out.kind = WitnessCase::NonsingularRadical;
      out.g = reflection(C, u);
      return out;
    }
  }
  Vec u1 = U.row(0);
  if (U.k == 1) {
    out.kind = WitnessCase::Reflection;
    Vec up = scan(C, [&](const Vec& v) { return !in_W(v) && C.B(u1, v) != 0; });
    std::vector<Vec> r1(W.basis());
    r1.push_back(up);
    Subspace W1 = rref(K, r1, d);
    Subspace Z = perp(C, W1);
    out.g = reflection(C, Z.row(0));
    return out;
  }
  out.kind = WitnessCase::Shear;
  Vec t1 = scan(C, [&](const Vec& v) { return !in_W(v) && C.Q(v) == 0 && C.B(u1, v) == 1; });
  Subspace P = perp(C, rref(K, {u1, t1}, d));
  Subspace UP = meet(K, P, U);
  Vec u2 = UP.row(0);
  Vec t2 = scan(C, [&](const Vec& v) { return contains(K, P, v) && !in_W(v) && C.Q(v) == 0 && C.B(u2, v) == 1; });
  std::vector<Vec> src = W.basis(), dst = W.basis();
  src.push_back(t1);
  dst.push_back(vadd(K, t1, u2));
  src.push_back(t2);
  dst.push_back(axpy(K, t2, K.neg(1), u1));
  out.g = from_images(K, src, dst);
  return out;
}

Matrix tightness_witness(const ClassicalForm& F, const std::vector<Subspace>& spaces) {
  return tightness_witness_full(F, spaces).g;
}

}  // namespace bw
