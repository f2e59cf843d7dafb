#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "basewright/errors.hpp"
#include "basewright/linalg.hpp"

using namespace bw;

namespace {

Vec random_vec(const Field& F, int d, std::mt19937& rng) {
  Vec v(d);
  for (auto& c : v) c = elt(rng() % F.order());
  return v;
}

Matrix random_matrix(const Field& F, int d, std::mt19937& rng) {
  Matrix M(d);
  for (auto& c : M.a) c = elt(rng() % F.order());
  return M;
}

// the set of all vectors spanned by rows, by repeated closure
std::set<Vec> brute_span(const Field& F, const std::vector<Vec>& rows, int d) {
  std::set<Vec> S{Vec(d, 0)};
  for (const auto& r : rows) {
    std::set<Vec> next;
    for (const auto& v : S)
      for (int c = 0; c < F.order(); ++c) next.insert(axpy(F, v, elt(c), r));
    S.swap(next);
  }
  return S;
}

}  // namespace

TEST_CASE("RREF is canonical for the spanned space") {
  std::mt19937 rng(7);
  for (int q : {2, 3, 4, 5}) {
    const Field& F = Field::gf(q);
    for (int trial = 0; trial < 60; ++trial) {
      int d = 2 + int(rng() % 4), k = 1 + int(rng() % d);
      std::vector<Vec> gens;
      for (int i = 0; i < k; ++i) gens.push_back(random_vec(F, d, rng));
      Subspace U = rref(F, gens, d);
      auto S = brute_span(F, gens, d);

      // another spanning set: the brute-force span itself, shuffled
      std::vector<Vec> all(S.begin(), S.end());
      std::shuffle(all.begin(), all.end(), rng);
      CHECK(rref(F, all, d) == U);

      // combine generators by a random invertible matrix
      std::vector<Vec> mixed = gens;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j) mixed[i] = axpy(F, mixed[i], elt(rng() % q), gens[j]);
      if (rank(F, mixed) == rank(F, gens)) CHECK(rref(F, mixed, d) == U);

      std::size_t size = 1;
      for (int i = 0; i < U.k; ++i) size *= q;
      CHECK(S.size() == size);
      auto V = span_vectors(F, U);
      CHECK(std::set<Vec>(V.begin(), V.end()) == S);
      CHECK(span_points(F, U).size() == (size - 1) / (q - 1));

      // reduced form: pivot columns are unit columns
      int prev = -1;
      for (int i = 0; i < U.k; ++i) {
        Vec r = U.row(i);
        int piv = int(std::find_if(r.begin(), r.end(), [](elt c) { return c != 0; }) - r.begin());
        CHECK(piv > prev);
        CHECK(r[piv] == 1);
        for (int j = 0; j < U.k; ++j)
          if (j != i) CHECK(U.row(j)[piv] == 0);
        prev = piv;
      }
    }
  }
}

TEST_CASE("meet and join against brute-force sets") {
  std::mt19937 rng(11);
  for (int q : {2, 3, 4}) {
    const Field& F = Field::gf(q);
    for (int trial = 0; trial < 40; ++trial) {
      int d = 3 + int(rng() % 3);
      std::vector<Vec> a, b;
      for (int i = 0, n = 1 + int(rng() % d); i < n; ++i) a.push_back(random_vec(F, d, rng));
      for (int i = 0, n = 1 + int(rng() % d); i < n; ++i) b.push_back(random_vec(F, d, rng));
      Subspace U = rref(F, a, d), W = rref(F, b, d);
      auto SU = brute_span(F, a, d), SW = brute_span(F, b, d);
      std::vector<Vec> common;
      std::set_intersection(SU.begin(), SU.end(), SW.begin(), SW.end(), std::back_inserter(common));
      CHECK(meet(F, U, W) == rref(F, common, d));
      std::vector<Vec> both = a;
      both.insert(both.end(), b.begin(), b.end());
      CHECK(join(F, U, W) == rref(F, both, d));
      CHECK(join(F, U, W).k + meet(F, U, W).k == U.k + W.k);
      for (const auto& v : SW) CHECK(contains(F, U, v) == (SU.count(v) == 1));
    }
  }
}

TEST_CASE("inverse, determinant, transpose") {
  std::mt19937 rng(3);
  for (int q : {2, 3, 5, 9}) {
    const Field& F = Field::gf(q);
    for (int trial = 0; trial < 40; ++trial) {
      int d = 1 + int(rng() % 5);
      Matrix A = random_matrix(F, d, rng), B = random_matrix(F, d, rng);
      CHECK(det(F, mul(F, A, B)) == F.mul(det(F, A), det(F, B)));
      CHECK(det(F, transpose(A)) == det(F, A));
      std::vector<Vec> rows;
      for (int i = 0; i < d; ++i) rows.push_back(A.row(i));
      bool singular = rank(F, rows) < d;
      CHECK(singular == (det(F, A) == 0));
      if (singular) {
        CHECK_THROWS_AS(inverse(F, A), Error);
      } else {
        CHECK(mul(F, A, inverse(F, A)) == Matrix::identity(d));
        Vec v = random_vec(F, d, rng);
        CHECK(apply(F, apply(F, v, A), inverse(F, A)) == v);
      }
    }
  }
}

TEST_CASE("kernel of the plain dot product") {
  const Field& F = Field::gf(3);
  std::vector<Vec> eqs = {{1, 1, 0, 2}, {0, 1, 1, 1}};
  Subspace K = kernel(F, eqs, 4);
  CHECK(K.k == 2);
  for (const auto& v : span_vectors(F, K))
    for (const auto& e : eqs) {
      elt s = 0;
      for (int i = 0; i < 4; ++i) s = F.add(s, F.mul(e[i], v[i]));
      CHECK(s == 0);
    }
}

TEST_CASE("vector index round trip and packed keys") {
  std::mt19937 rng(5);
  const Field& F = Field::gf(4);
  for (std::uint64_t i = 0; i < 256; ++i) CHECK(vec_index(F, vec_from_index(F, i, 4)) == i);
  std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
  std::set<Subspace> spaces;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vec> g = {random_vec(F, 5, rng), random_vec(F, 5, rng)};
    Subspace U = rref(F, g, 5);
    u128 key = pack_key(F, U);
    keys.insert({std::uint64_t(key >> 64), std::uint64_t(key)});
    spaces.insert(U);
  }
  CHECK(keys.size() == spaces.size());
}

TEST_CASE("act maps subspaces through a matrix") {
  const Field& F = Field::gf(2);
  Matrix g(3);
  g(0, 1) = g(1, 2) = g(2, 0) = 1;  // cyclic shift of coordinates
  Subspace U = rref(F, {unit(3, 0)}, 3);
  CHECK(act(F, U, g) == rref(F, {unit(3, 1)}, 3));
  Matrix z(3);
  CHECK_THROWS_AS(act(F, U, z, true), Error);
}
