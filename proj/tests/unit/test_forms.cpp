#include <doctest.h>

#include <random>

#include "basewright/errors.hpp"
#include "basewright/forms.hpp"

using namespace bw;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<Vec> all_vectors(const Field& F, int d) {
  std::vector<Vec> out;
  for (std::uint64_t i = 0; i < std::uint64_t(ipow(F.order(), d)); ++i) out.push_back(vec_from_index(F, i, d));
  return out;
}

Vec random_vec(const Field& F, int d, std::mt19937& rng) {
  Vec v(d);
  for (auto& c : v) c = elt(rng() % F.order());
  return v;
}

}  // namespace

TEST_CASE("polarization of the standard quadratic forms") {
  std::mt19937 rng(1);
  for (int q : {2, 3, 4, 5}) {
    const Field& F = Field::gf(q);
    for (auto [sign, d] : {std::pair{Sign::Plus, 4}, {Sign::Minus, 4}, {Sign::Plus, 6}, {Sign::Minus, 6},
                           {Sign::Circ, 5}, {Sign::Circ, 3}}) {
      auto C = standard_form(FormKind::Quadratic, sign, d, F);
      for (int t = 0; t < 200; ++t) {
        Vec u = random_vec(F, d, rng), v = random_vec(F, d, rng);
        elt c = elt(rng() % q);
        CHECK(C.B(u, v) == F.sub(F.sub(C.Q(vadd(F, u, v)), C.Q(u)), C.Q(v)));
        CHECK(C.B(u, v) == C.B(v, u));
        CHECK(C.Q(vscale(F, c, u)) == F.mul(F.mul(c, c), C.Q(u)));
      }
    }
  }
}

TEST_CASE("symplectic and hermitian forms") {
  std::mt19937 rng(2);
  for (int q : {2, 3, 5}) {
    const Field& F = Field::gf(q);
    auto C = standard_form(FormKind::Symplectic, Sign::None, 6, F);
    for (int t = 0; t < 100; ++t) {
      Vec u = random_vec(F, 6, rng), v = random_vec(F, 6, rng);
      CHECK(C.B(u, u) == 0);
      CHECK(C.B(u, v) == F.neg(C.B(v, u)));
    }
    CHECK_THROWS_AS(C.Q(Vec(6, 0)), Error);
  }
  for (int q : {2, 3}) {
    const Field& E = Field::gf_sq(q);
    for (int d : {3, 4}) {
      auto C = standard_form(FormKind::Unitary, Sign::None, d, E);
      for (int t = 0; t < 100; ++t) {
        Vec u = random_vec(E, d, rng), v = random_vec(E, d, rng);
        elt c = elt(rng() % E.order());
        CHECK(C.B(u, v) == E.conj(C.B(v, u)));
        CHECK(E.in_subfield(C.B(u, u)));
        CHECK(C.B(vscale(E, c, u), v) == E.mul(c, C.B(u, v)));
        CHECK(C.B(u, vscale(E, c, v)) == E.mul(E.conj(c), C.B(u, v)));
      }
    }
  }
}

TEST_CASE("singular vector counts determine the type") {
  // zero vector included: q^{2m-1} + eps (q^m - q^{m-1}) and q^{2m} for odd dimension
  for (int q : {2, 3, 4, 5}) {
    const Field& F = Field::gf(q);
    for (int m : {1, 2, 3}) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        auto C = standard_form(FormKind::Quadratic, s, 2 * m, F);
        long long n = 0;
        for (const auto& v : all_vectors(F, 2 * m)) n += C.Q(v) == 0;
        long long eps = s == Sign::Plus ? 1 : -1;
        CHECK(n == ipow(q, 2 * m - 1) + eps * (ipow(q, m) - ipow(q, m - 1)));
        CHECK(witt_index(C, whole(2 * m)) == (s == Sign::Plus ? m : m - 1));
        CHECK(classify(C, whole(2 * m)) == Tag{Tag::Nondegenerate, s, 0});
      }
      if (q % 2) {
        auto C = standard_form(FormKind::Quadratic, Sign::Circ, 2 * m + 1, F);
        long long n = 0;
        for (const auto& v : all_vectors(F, 2 * m + 1)) n += C.Q(v) == 0;
        CHECK(n == ipow(q, 2 * m));
      }
    }
  }
}

TEST_CASE("isotropic vector count of hermitian forms") {
  for (int q : {2, 3}) {
    const Field& E = Field::gf_sq(q);
    for (int d = 1; d <= 4; ++d) {
      auto C = standard_form(FormKind::Unitary, Sign::None, d, E);
      long long n = 0;
      for (const auto& v : all_vectors(E, d)) n += !is_zero(v) && C.B(v, v) == 0;
      long long sd = d % 2 ? -1 : 1;
      CHECK(n == (ipow(q, d) - sd) * (ipow(q, d - 1) + sd));
    }
  }
}

TEST_CASE("classify 2-spaces agrees with counting singular points") {
  std::mt19937 rng(4);
  for (int q : {2, 3, 4, 5}) {
    const Field& F = Field::gf(q);
    auto C = standard_form(FormKind::Quadratic, Sign::Plus, 6, F);
    for (int t = 0; t < 150; ++t) {
      Subspace U = rref(F, {random_vec(F, 6, rng), random_vec(F, 6, rng)}, 6);
      if (U.k != 2) continue;
      int sing = 0;
      for (const auto& p : span_points(F, U)) sing += C.Q(p) == 0;
      Tag tag = classify(C, U);
      if (tag.kind == Tag::Nondegenerate) {
        CHECK(sing == (tag.sign == Sign::Plus ? 2 : 0));
        if (q % 2) CHECK(discriminant_sign(C, U) == tag.sign);
      }
      if (sing == q + 1) CHECK(tag.kind == Tag::TotallySingular);
    }
  }
}

TEST_CASE("perp and radical") {
  const Field& F = Field::gf(3);
  auto C = standard_form(FormKind::Quadratic, Sign::Circ, 5, F);
  Subspace E = rref(F, {C.basis_vec(C.e(1)), C.basis_vec(C.e(2))}, 5);
  Subspace P = perp(C, E);
  CHECK(P.k == 3);
  CHECK(contains(F, P, E));
  CHECK(radical(C, E) == E);
  CHECK(radical(C, whole(5)).k == 0);
  for (const auto& u : span_vectors(F, E))
    for (const auto& v : span_vectors(F, P)) CHECK(C.B(u, v) == 0);
}

TEST_CASE("isometries and pairs") {
  const Field& F = Field::gf(3);
  auto C = standard_form(FormKind::Quadratic, Sign::Plus, 4, F);
  CHECK(is_isometry(C, Matrix::identity(4)));
  CHECK(is_isometry(C, Matrix::scalar(4, 2)));
  Matrix swap(4);  // e1 <-> f1
  swap(C.e(1), C.f(1)) = swap(C.f(1), C.e(1)) = 1;
  swap(C.e(2), C.e(2)) = swap(C.f(2), C.f(2)) = 1;
  CHECK(is_isometry(C, swap));
  CHECK_FALSE(is_isometry(C, Matrix::scalar(4, 0)));
  CHECK(pair_check(C, C.basis_vec(C.e(1)), C.basis_vec(C.f(1)), PairKind::Hyperbolic));
  auto M = standard_form(FormKind::Quadratic, Sign::Minus, 4, F);
  CHECK(pair_check(M, M.basis_vec(M.x()), M.basis_vec(M.y()), PairKind::Elliptic));
}

TEST_CASE("dimension and sign must agree") {
  const Field& F = Field::gf(3);
  CHECK_THROWS_AS(standard_form(FormKind::Quadratic, Sign::Circ, 4, F), Error);
  CHECK_THROWS_AS(standard_form(FormKind::Quadratic, Sign::Plus, 5, F), Error);
  CHECK_THROWS_AS(standard_form(FormKind::Symplectic, Sign::None, 5, F), Error);
  CHECK_THROWS_AS(standard_form(FormKind::Unitary, Sign::None, 3, F), Error);
  CHECK(parse_sign("minus") == Sign::Minus);
  CHECK(parse_sign("o") == Sign::Circ);
}
