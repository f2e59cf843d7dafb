#include "basewright/forms.hpp"

#include "basewright/errors.hpp"

namespace bw {

const char* kind_name(FormKind k) {
  switch (k) {
    case FormKind::Linear: return "linear";
    case FormKind::Unitary: return "unitary";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Quadratic: return "quadratic";
  }
  return "?";
}

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::None: return "";
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::Circ: return "o";
  }
  return "?";
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  if (s == "o" || s == "0" || s == "circ") return Sign::Circ;
  if (s.empty() || s == "none") return Sign::None;
  throw Error(Errc::BadParams, "sign '" + s + "'");
}

std::vector<std::string> standard_labels(FormKind kind, Sign sign, int d) {
  std::vector<std::string> l;
  if (kind == FormKind::Linear) {
    for (int i = 1; i <= d; ++i) l.push_back("v" + std::to_string(i));
    return l;
  }
  int a = d / 2;
  if (kind == FormKind::Quadratic && sign == Sign::Minus) a = d / 2 - 1;
  for (int i = 1; i <= a; ++i) l.push_back("e" + std::to_string(i));
  for (int i = 1; i <= a; ++i) l.push_back("f" + std::to_string(i));
  if (int(l.size()) < d) l.push_back("x");
  if (int(l.size()) < d) l.push_back("y");
  return l;
}

ClassicalForm standard_form(FormKind kind, Sign sign, int d, const Field& F) {
  ClassicalForm C;
  C.kind = kind;
  C.d = d;
  C.F = &F;
  C.gram = Matrix(d);
  C.qm = Matrix(d);
  switch (kind) {
    case FormKind::Linear:
      C.sign = Sign::None;
      break;
    case FormKind::Unitary:
      if (!F.quadratic()) throw Error(Errc::Inadmissible, "unitary form needs GF(q^2)");
      C.a = d / 2;
      for (int i = 1; i <= C.a; ++i) C.gram(C.e(i), C.f(i)) = C.gram(C.f(i), C.e(i)) = 1;
      if (d % 2) C.gram(C.x(), C.x()) = 1;
      break;
    case FormKind::Symplectic:
      if (d % 2) throw Error(Errc::Inadmissible, "symplectic form needs even d");
      C.a = d / 2;
      for (int i = 1; i <= C.a; ++i) {
        C.gram(C.e(i), C.f(i)) = 1;
        C.gram(C.f(i), C.e(i)) = F.neg(1);
      }
      break;
    case FormKind::Quadratic: {
      if ((sign == Sign::Circ) != (d % 2 == 1) || sign == Sign::None)
        throw Error(Errc::Inadmissible, "quadratic sign does not match dimension");
      C.sign = sign;
      C.a = sign == Sign::Minus ? d / 2 - 1 : d / 2;
      for (int i = 1; i <= C.a; ++i) C.qm(C.e(i), C.f(i)) = 1;
      if (sign == Sign::Circ) C.qm(C.x(), C.x()) = 1;
      if (sign == Sign::Minus) {
        C.zeta = F.find_zeta();
        C.qm(C.x(), C.x()) = 1;
        C.qm(C.x(), C.y()) = 1;
        C.qm(C.y(), C.y()) = C.zeta;
      }
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          C.gram(i, j) = i == j ? F.add(C.qm(i, i), C.qm(i, i)) : (i < j ? C.qm(i, j) : C.qm(j, i));
      break;
    }
  }
  if (kind != FormKind::Quadratic) C.sign = Sign::None;
  C.labels = standard_labels(kind, C.sign, d);
  return C;
}

elt ClassicalForm::B(const Vec& u, const Vec& v) const {
  const Field& K = *F;
  bool uni = kind == FormKind::Unitary;
  elt r = 0;
  for (int i = 0; i < d; ++i) {
    if (!u[i]) continue;
    for (int j = 0; j < d; ++j) {
      elt g = gram(i, j);
      if (!g || !v[j]) continue;
      elt vj = uni ? K.conj(v[j]) : v[j];
      r = K.add(r, K.mul(u[i], K.mul(g, vj)));
    }
  }
  return r;
}

elt ClassicalForm::Q(const Vec& u) const {
  if (kind != FormKind::Quadratic) throw Error(Errc::KindMismatch, "Q on a non-quadratic form");
  const Field& K = *F;
  elt r = 0;
  for (int i = 0; i < d; ++i) {
    if (!u[i]) continue;
    for (int j = i; j < d; ++j) {
      elt c = qm(i, j);
      if (!c || !u[j]) continue;
      r = K.add(r, K.mul(c, K.mul(u[i], u[j])));
    }
  }
  return r;
}

Subspace perp(const ClassicalForm& C, const Subspace& U) {
  const Field& K = C.field();
  bool uni = C.kind == FormKind::Unitary;
  std::vector<Vec> eqs;
  for (int t = 0; t < U.k; ++t) {
    Vec u = U.row(t);
    // B(v,u) = sum_l v_l (sum_j G_lj conj(u_j))
    Vec c(C.d, 0);
    for (int l = 0; l < C.d; ++l)
      for (int j = 0; j < C.d; ++j)
        if (C.gram(l, j) && u[j]) c[l] = K.add(c[l], K.mul(C.gram(l, j), uni ? K.conj(u[j]) : u[j]));
    eqs.push_back(c);
  }
  if (eqs.empty()) return whole(C.d);
  return kernel(K, eqs, C.d);
}

Subspace radical(const ClassicalForm& C, const Subspace& U) {
  return meet(C.field(), U, perp(C, U));
}

Matrix gram_of(const ClassicalForm& C, const std::vector<Vec>& basis) {
  Matrix G(int(basis.size()));
  for (int i = 0; i < G.d; ++i)
    for (int j = 0; j < G.d; ++j) G(i, j) = C.B(basis[i], basis[j]);
  return G;
}

namespace {

// first nonzero singular vector of U (lex scan of coefficient tuples)
bool find_singular(const ClassicalForm& C, const Subspace& U, Vec& out) {
  for (auto& v : span_points(C.field(), U))
    if (C.Q(v) == 0) { out = v; return true; }
  return false;
}

}  // namespace

int witt_index(const ClassicalForm& C, const Subspace& U0) {
  const Field& K = C.field();
  Subspace U = U0;
  int w = 0;
  while (U.k >= 2) {
    Vec v;
    if (!find_singular(C, U, v)) break;
    Vec wv;
    bool found = false;
    for (int i = 0; i < U.k && !found; ++i) {
      elt b = C.B(U.row(i), v);
      if (b) { wv = vscale(K, K.inv(b), U.row(i)); found = true; }
    }
    if (!found) break;  // degenerate; not expected for non-degenerate U
    ++w;
    Subspace H = rref(K, {v, wv}, C.d);
    U = meet(K, U, perp(C, H));
  }
  if (U.k == 1 && C.Q(U.row(0)) == 0) ++w;
  return w;
}

Sign discriminant_sign(const ClassicalForm& C, const Subspace& U) {
  const Field& K = C.field();
  elt dt = det(K, gram_of(C, U.basis()));
  if ((U.k / 2) % 2) dt = K.neg(dt);
  return K.is_square(dt) ? Sign::Plus : Sign::Minus;
}

Tag classify(const ClassicalForm& C, const Subspace& U) {
  Tag t;
  if (C.kind == FormKind::Linear || U.k == 0) return t;
  const Field& K = C.field();
  Subspace R = radical(C, U);
  bool quad = C.quadratic();
  bool even_char = K.p() == 2;
  if (R.k == U.k) {
    bool singular = true;
    if (quad)
      for (int i = 0; i < U.k && singular; ++i) singular = C.Q(U.row(i)) == 0;
    if (singular) return t;
  }
  if (quad && even_char) {
    if (U.k == 1) {
      t.kind = Tag::NonsingularOne;
      return t;
    }
    if (R.k == 1 && U.k % 2 == 1 && C.Q(R.row(0)) != 0) {
      t.kind = Tag::Nondegenerate;
      t.sign = Sign::Circ;
      return t;
    }
  }
  if (R.k != 0) {
    t.kind = Tag::DegenerateOther;
    return t;
  }
  t.kind = Tag::Nondegenerate;
  if (!quad) return t;
  if (U.k % 2 == 0) {
    t.sign = witt_index(C, U) == U.k / 2 ? Sign::Plus : Sign::Minus;
    return t;
  }
  t.sign = Sign::Circ;
  if (!even_char) {
    if ((C.d - U.k) % 2 == 0 && C.d > U.k) {
      Tag p = classify(C, perp(C, U));
      t.aux = p.sign == Sign::Plus ? 1 : -1;
    } else if (C.d > U.k) {
      elt dt = K.mul(det(K, gram_of(C, U.basis())), 2 % K.p());
      t.aux = K.is_square(dt) ? 1 : -1;
    }
  }
  return t;
}

std::string tag_name(const Tag& t) {
  std::string s;
  switch (t.kind) {
    case Tag::TotallySingular: return "totally_singular";
    case Tag::Nondegenerate: s = "nondegenerate"; break;
    case Tag::NonsingularOne: return "nonsingular_1space";
    case Tag::DegenerateOther: return "degenerate_other";
  }
  if (t.sign != Sign::None) s += std::string("(") + sign_name(t.sign) + ")";
  if (t.aux) s += t.aux > 0 ? "[+]" : "[-]";
  return s;
}

bool is_isometry(const ClassicalForm& C, const Matrix& g) {
  const Field& K = C.field();
  if (g.d != C.d) return false;
  std::vector<Vec> img;
  for (int i = 0; i < C.d; ++i) img.push_back(g.row(i));
  if (C.kind == FormKind::Linear) return det(K, g) != 0;
  for (int i = 0; i < C.d; ++i)
    for (int j = 0; j < C.d; ++j)
      if (C.B(img[i], img[j]) != C.gram(i, j)) return false;
  if (C.quadratic())
    for (int i = 0; i < C.d; ++i)
      if (C.Q(img[i]) != C.qm(i, i)) return false;
  return det(K, g) != 0;
}

bool pair_check(const ClassicalForm& C, const Vec& u, const Vec& v, PairKind kind) {
  const Field& K = C.field();
  if (kind == PairKind::Hyperbolic) {
    if (C.B(u, u) || C.B(v, v) || C.B(u, v) != 1) return false;
    if (C.quadratic() && (C.Q(u) || C.Q(v))) return false;
    return true;
  }
  if (!C.quadratic()) return false;
  elt z = C.Q(v);
  if (C.Q(u) != 1 || C.B(u, v) != 1) return false;
  for (int t = 0; t < K.order(); ++t)
    if (K.add(K.add(K.mul(elt(t), elt(t)), elt(t)), z) == 0) return false;
  return true;
}

}  // namespace bw
