#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "basewright/gf.hpp"

namespace bw {

using Vec = std::vector<elt>;
using u128 = unsigned __int128;

struct Matrix {
  int d = 0;
  std::vector<elt> a;  // row-major

  Matrix() = default;
  explicit Matrix(int n) : d(n), a(std::size_t(n) * n, 0) {}
  static Matrix identity(int n);
  static Matrix scalar(int n, elt s);

  elt& operator()(int i, int j) { return a[std::size_t(i) * d + j]; }
  elt operator()(int i, int j) const { return a[std::size_t(i) * d + j]; }
  Vec row(int i) const { return Vec(a.begin() + i * d, a.begin() + (i + 1) * d); }
  bool operator==(const Matrix& o) const { return d == o.d && a == o.a; }
};

Matrix mul(const Field& F, const Matrix& A, const Matrix& B);
// v * A, v a row vector
Vec apply(const Field& F, const Vec& v, const Matrix& A);
// SingularMatrix if not invertible
Matrix inverse(const Field& F, const Matrix& A);
int rank(const Field& F, std::vector<Vec> rows);
bool is_scalar(const Matrix& A);
elt det(const Field& F, Matrix A);
// {v : <e, v> = 0 for every row e}, plain dot product
struct Subspace;
Subspace kernel(const Field& F, const std::vector<Vec>& eqs, int d);
Matrix transpose(const Matrix& A);

Vec vadd(const Field& F, const Vec& u, const Vec& v);
Vec vscale(const Field& F, elt s, const Vec& v);
// u + s*v
Vec axpy(const Field& F, const Vec& u, elt s, const Vec& v);
bool is_zero(const Vec& v);
Vec unit(int d, int i);
// scale so the first nonzero entry is 1
Vec normalize(const Field& F, Vec v);

// Subspace in reduced row-echelon form, pivots increasing.
struct Subspace {
  int k = 0, d = 0;
  std::vector<elt> rows;  // k*d

  Vec row(int i) const { return Vec(rows.begin() + i * d, rows.begin() + (i + 1) * d); }
  std::vector<Vec> basis() const;
  bool operator==(const Subspace& o) const { return k == o.k && d == o.d && rows == o.rows; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const {
    if (k != o.k) return k < o.k;
    return rows < o.rows;
  }
};

Subspace rref(const Field& F, const std::vector<Vec>& rows, int d);
Subspace act(const Field& F, const Subspace& U, const Matrix& g, bool check_invertible = false);
Subspace meet(const Field& F, const Subspace& U, const Subspace& W);
Subspace join(const Field& F, const Subspace& U, const Subspace& W);
bool contains(const Field& F, const Subspace& U, const Vec& v);
bool contains(const Field& F, const Subspace& U, const Subspace& W);
Subspace whole(int d);

// every vector of U (q^k of them), in coefficient order
std::vector<Vec> span_vectors(const Field& F, const Subspace& U);
// the 1-spaces of U, as normalized vectors
std::vector<Vec> span_points(const Field& F, const Subspace& U);

// labels of the nonzero coordinates of v
std::vector<std::string> support(const Vec& v, const std::vector<std::string>& labels);

// Packs the RREF entries; BadParams if they do not fit in 128 bits.
u128 pack_key(const Field& F, const Subspace& U);
int bits_per_entry(const Field& F);

// big-endian base-q index of a vector and back
std::uint64_t vec_index(const Field& F, const Vec& v);
Vec vec_from_index(const Field& F, std::uint64_t idx, int d);

std::string str(const Field& F, const Vec& v);
std::string str(const Field& F, const Subspace& U);

}  // namespace bw
