#include <doctest.h>

#include <cstdlib>

#include "basewright/clgroups.hpp"
#include "basewright/errors.hpp"

using namespace bw;

namespace {

// all d x d matrices over F that are invertible and preserve the form
long long brute_isometries(const ClassicalForm& C, bool linear) {
  const Field& F = C.field();
  int d = C.d, cells = d * d;
  long long total = 1, count = 0;
  for (int i = 0; i < cells; ++i) total *= F.order();
  Matrix M(d);
  for (long long idx = 0; idx < total; ++idx) {
    long long r = idx;
    for (int i = 0; i < cells; ++i) {
      M.a[i] = elt(r % F.order());
      r /= F.order();
    }
    if (det(F, M) == 0) continue;
    if (linear || is_isometry(C, M)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("orders of small groups by exhaustive search") {
  struct Case { Family f; int d, q; long long order; };
  for (auto c : {Case{Family::GL, 3, 2, 168}, Case{Family::Sp, 4, 2, 720}, Case{Family::GOplus, 4, 2, 72},
                 Case{Family::GOminus, 4, 2, 120}, Case{Family::Sp, 2, 3, 24}, Case{Family::GU, 2, 2, 18},
                 Case{Family::GOcirc, 3, 3, 48}, Case{Family::GOplus, 2, 5, 8}, Case{Family::GOminus, 2, 3, 8}}) {
    CAPTURE(family_name(c.f));
    CAPTURE(c.d);
    CAPTURE(c.q);
    CHECK(order_formula(c.f, c.d, c.q) == c.order);
    const MatrixGroup& G = build_group(c.f, c.d, c.q);
    CHECK(G.order == c.order);
    CHECK(brute_isometries(G.form, c.f == Family::GL) == c.order);
  }
}

TEST_CASE("generators certify the formula order") {
  struct Case { Family f; int d, q; };
  for (auto c : {Case{Family::GL, 4, 3}, Case{Family::GU, 3, 3}, Case{Family::GU, 4, 2}, Case{Family::Sp, 6, 2},
                 Case{Family::Sp, 4, 5}, Case{Family::GOplus, 6, 3}, Case{Family::GOminus, 6, 2},
                 Case{Family::GOcirc, 5, 3}, Case{Family::GOminus, 4, 4}}) {
    const MatrixGroup& G = build_group(c.f, c.d, c.q);
    PermGroup P;
    P.n = projective_points(G.field(), c.d).pts.size();
    const auto& pts = projective_points(G.field(), c.d);
    for (const auto& g : G.gens) {
      CHECK(det(G.field(), g) != 0);
      if (c.f != Family::GL) CHECK(is_isometry(G.form, g));
      P.gens.push_back(point_perm(G.field(), pts, g));
    }
    // the permutation image on points is G / scalars
    CHECK(schreier_sims(P).order() * BigInt(scalar_count(G)) == G.order);
    for (const auto& s : scalars(G)) CHECK(is_scalar(s));
  }
}

TEST_CASE("projective points") {
  const Field& F = Field::gf(3);
  const PointSet& P = projective_points(F, 3);
  CHECK(P.pts.size() == 13);
  for (std::uint32_t i = 0; i < P.pts.size(); ++i) {
    CHECK(normalize(F, P.pts[i]) == P.pts[i]);
    CHECK(point_of(F, P, vscale(F, 2, P.pts[i])) == i);
  }
}

TEST_CASE("odd orthogonal model of the symplectic group in even characteristic") {
  SpOrthoModel S = sp_to_odd_orthogonal(2, 2);
  CHECK(S.go->order == 720);
  for (const auto& g : S.go->gens) CHECK(is_isometry(S.sp_form, S.to_symplectic(g)));
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(build_group(Family::Sp, 5, 2), Error);
  CHECK_THROWS_AS(build_group(Family::GOcirc, 4, 3), Error);
  CHECK_THROWS_AS(build_group(Family::GU, 3, 5), Error);  // needs GF(25)
  CHECK_THROWS_AS(check_admissible(Family::GL, 3, 6), Error);
  CHECK(parse_family("go-") == Family::GOminus);
  CHECK(parse_family("GOo") == Family::GOcirc);
  CHECK_THROWS_AS(parse_family("PSL"), Error);
}

TEST_CASE("Mathieu data files") {
  for (auto [name, n] : {std::pair{"M11", 11}, {"M12", 12}, {"M23", 23}, {"M24", 24}}) {
    PermGroup P = load_permgroup(name);
    CHECK(P.n == std::size_t(n));
    CHECK(schreier_sims(P).order() == permgroup_expected_order(name));
  }
  CHECK(permgroup_expected_order("M24") == BigInt("244823040"));
  CHECK_THROWS_AS(load_permgroup("M13"), Error);
}
