#include "basewright/linalg.hpp"

#include <sstream>

#include "basewright/errors.hpp"

namespace bw {

Matrix Matrix::identity(int n) { return scalar(n, 1); }

Matrix Matrix::scalar(int n, elt s) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix mul(const Field& F, const Matrix& A, const Matrix& B) {
  int d = A.d;
  Matrix C(d);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      elt x = A(i, l);
      if (!x) continue;
      for (int j = 0; j < d; ++j) C(i, j) = F.add(C(i, j), F.mul(x, B(l, j)));
    }
  return C;
}

Vec apply(const Field& F, const Vec& v, const Matrix& A) {
  int d = A.d;
  Vec r(d, 0);
  for (int l = 0; l < d; ++l) {
    elt x = v[l];
    if (!x) continue;
    const elt* row = &A.a[std::size_t(l) * d];
    for (int j = 0; j < d; ++j) r[j] = F.add(r[j], F.mul(x, row[j]));
  }
  return r;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.d);
  for (int i = 0; i < A.d; ++i)
    for (int j = 0; j < A.d; ++j) T(j, i) = A(i, j);
  return T;
}

Matrix inverse(const Field& F, const Matrix& A) {
  int d = A.d;
  Matrix M = A, R = Matrix::identity(d);
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r)
      if (M(r, c)) { piv = r; break; }
    if (piv < 0) throw Error(Errc::SingularMatrix, "matrix not invertible");
    if (piv != c)
      for (int j = 0; j < d; ++j) {
        std::swap(M(piv, j), M(c, j));
        std::swap(R(piv, j), R(c, j));
      }
    elt s = F.inv(M(c, c));
    for (int j = 0; j < d; ++j) {
      M(c, j) = F.mul(s, M(c, j));
      R(c, j) = F.mul(s, R(c, j));
    }
    for (int r = 0; r < d; ++r) {
      if (r == c || !M(r, c)) continue;
      elt t = F.neg(M(r, c));
      for (int j = 0; j < d; ++j) {
        M(r, j) = F.add(M(r, j), F.mul(t, M(c, j)));
        R(r, j) = F.add(R(r, j), F.mul(t, R(c, j)));
      }
    }
  }
  return R;
}

int rank(const Field& F, std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  return rref(F, rows, int(rows[0].size())).k;
}

bool is_scalar(const Matrix& A) {
  for (int i = 0; i < A.d; ++i)
    for (int j = 0; j < A.d; ++j)
      if (i != j ? A(i, j) != 0 : A(i, i) != A(0, 0)) return false;
  return A.d == 0 || A(0, 0) != 0;
}

elt det(const Field& F, Matrix M) {
  int d = M.d;
  elt r = 1;
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = c; i < d; ++i)
      if (M(i, c)) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < d; ++j) std::swap(M(piv, j), M(c, j));
      r = F.neg(r);
    }
    r = F.mul(r, M(c, c));
    elt s = F.inv(M(c, c));
    for (int i = c + 1; i < d; ++i) {
      if (!M(i, c)) continue;
      elt t = F.neg(F.mul(M(i, c), s));
      for (int j = c; j < d; ++j) M(i, j) = F.add(M(i, j), F.mul(t, M(c, j)));
    }
  }
  return r;
}

Subspace kernel(const Field& F, const std::vector<Vec>& eqs, int d) {
  Subspace E = rref(F, eqs, d);
  std::vector<int> pivcol;
  std::vector<char> is_piv(d, 0);
  for (int r = 0; r < E.k; ++r)
    for (int c = 0; c < d; ++c)
      if (E.rows[r * d + c]) { pivcol.push_back(c); is_piv[c] = 1; break; }
  std::vector<Vec> out;
  for (int fcol = 0; fcol < d; ++fcol) {
    if (is_piv[fcol]) continue;
    Vec sol(d, 0);
    sol[fcol] = 1;
    for (int r = 0; r < E.k; ++r) sol[pivcol[r]] = F.neg(E.rows[r * d + fcol]);
    out.push_back(sol);
  }
  return rref(F, out, d);
}

Vec vadd(const Field& F, const Vec& u, const Vec& v) {
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = F.add(u[i], v[i]);
  return r;
}

Vec vscale(const Field& F, elt s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = F.mul(s, v[i]);
  return r;
}

Vec axpy(const Field& F, const Vec& u, elt s, const Vec& v) {
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = F.add(u[i], F.mul(s, v[i]));
  return r;
}

bool is_zero(const Vec& v) {
  for (elt x : v) if (x) return false;
  return true;
}

Vec unit(int d, int i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

Vec normalize(const Field& F, Vec v) {
  for (elt x : v)
    if (x) return vscale(F, F.inv(x), v);
  return v;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> b;
  for (int i = 0; i < k; ++i) b.push_back(row(i));
  return b;
}

Subspace rref(const Field& F, const std::vector<Vec>& in, int d) {
  std::vector<Vec> m = in;
  int r = 0;
  for (int c = 0; c < d && r < int(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(m.size()); ++i)
      if (m[i][c]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    m[r] = vscale(F, F.inv(m[r][c]), m[r]);
    for (int i = 0; i < int(m.size()); ++i)
      if (i != r && m[i][c]) m[i] = axpy(F, m[i], F.neg(m[i][c]), m[r]);
    ++r;
  }
  Subspace U;
  U.k = r;
  U.d = d;
  U.rows.reserve(std::size_t(r) * d);
  for (int i = 0; i < r; ++i) U.rows.insert(U.rows.end(), m[i].begin(), m[i].end());
  return U;
}

Subspace act(const Field& F, const Subspace& U, const Matrix& g, bool check_invertible) {
  if (check_invertible) inverse(F, g);
  std::vector<Vec> img;
  img.reserve(U.k);
  for (int i = 0; i < U.k; ++i) img.push_back(apply(F, U.row(i), g));
  return rref(F, img, U.d);
}

Subspace join(const Field& F, const Subspace& U, const Subspace& W) {
  auto rows = U.basis();
  auto w = W.basis();
  rows.insert(rows.end(), w.begin(), w.end());
  return rref(F, rows, U.d);
}

Subspace meet(const Field& F, const Subspace& U, const Subspace& W) {
  // kernel of [U; -W] read off from the null space of the stacked coefficients
  int d = U.d, a = U.k, b = W.k;
  if (a == 0 || b == 0) return rref(F, {}, d);
  // columns: coefficients c (a) and e (b); equations sum c_i u_i - sum e_j w_j = 0
  int n = a + b;
  std::vector<Vec> eq(d, Vec(n, 0));
  for (int t = 0; t < d; ++t) {
    for (int i = 0; i < a; ++i) eq[t][i] = U.rows[i * d + t];
    for (int j = 0; j < b; ++j) eq[t][a + j] = F.neg(W.rows[j * d + t]);
  }
  Subspace E = rref(F, eq, n);
  std::vector<int> pivcol;
  std::vector<char> is_piv(n, 0);
  for (int r = 0; r < E.k; ++r)
    for (int c = 0; c < n; ++c)
      if (E.rows[r * n + c]) { pivcol.push_back(c); is_piv[c] = 1; break; }
  std::vector<Vec> out;
  for (int fcol = 0; fcol < n; ++fcol) {
    if (is_piv[fcol]) continue;
    Vec sol(n, 0);
    sol[fcol] = 1;
    for (int r = 0; r < E.k; ++r) sol[pivcol[r]] = F.neg(E.rows[r * n + fcol]);
    Vec v(d, 0);
    for (int i = 0; i < a; ++i)
      if (sol[i]) v = axpy(F, v, sol[i], U.row(i));
    out.push_back(v);
  }
  return rref(F, out, d);
}

bool contains(const Field& F, const Subspace& U, const Vec& v) {
  Vec r = v;
  int d = U.d;
  for (int i = 0; i < U.k; ++i) {
    int c = 0;
    while (!U.rows[i * d + c]) ++c;
    if (r[c]) r = axpy(F, r, F.neg(r[c]), U.row(i));
  }
  return is_zero(r);
}

bool contains(const Field& F, const Subspace& U, const Subspace& W) {
  for (int i = 0; i < W.k; ++i)
    if (!contains(F, U, W.row(i))) return false;
  return true;
}

Subspace whole(int d) {
  Subspace U;
  U.k = U.d = d;
  U.rows.assign(std::size_t(d) * d, 0);
  for (int i = 0; i < d; ++i) U.rows[i * d + i] = 1;
  return U;
}

std::vector<Vec> span_vectors(const Field& F, const Subspace& U) {
  std::vector<Vec> out;
  int q = F.order();
  std::size_t total = 1;
  for (int i = 0; i < U.k; ++i) total *= q;
  out.reserve(total);
  std::vector<int> c(U.k, 0);
  for (std::size_t t = 0; t < total; ++t) {
    Vec v(U.d, 0);
    for (int i = 0; i < U.k; ++i)
      if (c[i]) v = axpy(F, v, elt(c[i]), U.row(i));
    out.push_back(v);
    for (int i = U.k - 1; i >= 0; --i) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
  }
  return out;
}

std::vector<Vec> span_points(const Field& F, const Subspace& U) {
  std::vector<Vec> out;
  for (auto& v : span_vectors(F, U)) {
    if (is_zero(v)) continue;
    for (elt x : v)
      if (x) {
        if (x == 1) out.push_back(v);
        break;
      }
  }
  return out;
}

std::vector<std::string> support(const Vec& v, const std::vector<std::string>& labels) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.push_back(i < labels.size() ? labels[i] : std::to_string(i));
  return s;
}

int bits_per_entry(const Field& F) {
  int b = 0;
  while ((1 << b) < F.order()) ++b;
  return b;
}

u128 pack_key(const Field& F, const Subspace& U) {
  int b = bits_per_entry(F);
  std::size_t need = std::size_t(U.k) * U.d * b;
  if (need > 120) throw Error(Errc::BadParams, "subspace key exceeds 128 bits");
  u128 key = U.k;
  for (elt x : U.rows) key = (key << b) | x;
  return key;
}

std::uint64_t vec_index(const Field& F, const Vec& v) {
  std::uint64_t r = 0;
  for (elt x : v) r = r * F.order() + x;
  return r;
}

Vec vec_from_index(const Field& F, std::uint64_t idx, int d) {
  Vec v(d);
  for (int i = d - 1; i >= 0; --i) {
    v[i] = elt(idx % F.order());
    idx /= F.order();
  }
  return v;
}

std::string str(const Field& F, const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << F.str(v[i]);
  os << ")";
  return os.str();
}

std::string str(const Field& F, const Subspace& U) {
  std::ostringstream os;
  os << "<";
  for (int i = 0; i < U.k; ++i) os << (i ? " " : "") << str(F, U.row(i));
  os << ">";
  return os.str();
}

}  // namespace bw
