#include "basewright/tables.hpp"

#include <sstream>

#include "basewright/errors.hpp"

namespace bw {

namespace {

// small linear-combination helper over the labelled basis
struct Lin {
  const ClassicalForm& C;
  const Field& K;
  explicit Lin(const ClassicalForm& c) : C(c), K(c.field()) {}
  Vec e(int i) const { check(C.e(i), i <= C.a); return unit(C.d, C.e(i)); }
  Vec f(int i) const { check(C.f(i), i <= C.a); return unit(C.d, C.f(i)); }
  Vec x() const { check(C.x(), C.d > 2 * C.a); return unit(C.d, C.x()); }
  Vec y() const { check(C.y(), C.d > 2 * C.a + 1); return unit(C.d, C.y()); }
  Vec v(int i) const { check(i - 1, i >= 1 && i <= C.d); return unit(C.d, i - 1); }
  Vec add(const Vec& a, const Vec& b) const { return vadd(K, a, b); }
  Vec sub(const Vec& a, const Vec& b) const { return axpy(K, a, K.neg(1), b); }
  Vec sc(elt c, const Vec& a) const { return vscale(K, c, a); }
  Vec neg(const Vec& a) const { return sc(K.neg(1), a); }
  Subspace span(std::initializer_list<Vec> rows) const { return rref(K, std::vector<Vec>(rows), C.d); }
  Subspace span(const std::vector<Vec>& rows) const { return rref(K, rows, C.d); }
  static void check(int, bool ok) {
    if (!ok) throw Error(Errc::Inadmissible, "basis vector index outside the form");
  }
};

Vec sum(const Lin& L, std::initializer_list<Vec> vs) {
  Vec r(L.C.d, 0);
  for (auto& v : vs) r = L.add(r, v);
  return r;
}

std::string estr(const Field& K, elt a) { return K.str(a); }

BaseCandidate start(const ActionSpec& spec, const std::string& table, const std::string& row) {
  BaseCandidate B;
  B.spec = spec;
  B.provenance.table = table;
  B.provenance.row = row;
  B.provenance.d = spec.d;
  B.provenance.q = spec.q;
  B.provenance.sign = spec.sign;
  return B;
}

void finish(BaseCandidate& B) {
  const MatrixGroup& G = acting_group(B.spec);
  Tag want = expected_tag(B.spec);
  for (std::size_t i = 0; i < B.points.size(); ++i) {
    const Subspace& U = B.points[i];
    if (U.k != B.spec.k) throw Error(Errc::BadShape, "candidate point " + std::to_string(i) + " has wrong dimension");
    if (G.family != Family::GL && classify(G.form, U) != want)
      throw Error(Errc::SeedTagMismatch, "candidate point " + std::to_string(i) + " " + str(G.field(), U) + " is " +
                                             tag_name(classify(G.form, U)) + ", expected " + tag_name(want));
    for (std::size_t j = 0; j < i; ++j)
      if (B.points[j] == U) throw Error(Errc::BadShape, "candidate points repeat");
  }
}

// -alpha a non-square, first in enumeration order
elt find_alpha(const Field& K) {
  for (int a = 1; a < K.order(); ++a)
    if (!K.is_square(K.neg(elt(a)))) return elt(a);
  throw Error(Errc::BadParams, "no non-square in GF(2^f)");
}

}  // namespace

Sign table_sign(const std::string& table, Family f, Sign requested) {
  if (table == "4") return Sign::Minus;
  if (table == "3") return is_orthogonal(f) ? Sign::Plus : Sign::None;
  if (table == "6") return requested == Sign::None ? Sign::Plus : requested;
  if (table == "n1" && requested == Sign::None) return Sign::Plus;
  return requested;
}

BaseCandidate table1_base(Family fam, int d, int q) {
  check_admissible(fam, d, q);
  if (fam == Family::GL) throw Error(Errc::Inadmissible, "table 1 has no linear row");
  if (is_orthogonal(fam) ? d < 5 : d < 3) throw Error(Errc::Inadmissible, "table 1 needs d >= 5 (orthogonal) or d >= 3");
  ActionSpec spec = ActionSpec::singular(fam, d, q, 1);
  const MatrixGroup& G = build_group(fam, d, q);
  Lin L(G.form);
  const Field& K = L.K;
  int a = G.form.a;
  std::string row;
  BaseCandidate B;
  auto Vi = [&](int i) { return L.span({L.add(L.e(1), L.e(i))}); };
  auto Wi = [&](int i) { return L.span({L.add(L.e(1), L.f(i))}); };
  std::vector<Subspace> pts = {L.span({L.e(1)}), L.span({L.f(1)})};
  if (fam == Family::GU || fam == Family::Sp) {
    for (int i = 2; i <= a; ++i) pts.push_back(Vi(i));
    for (int i = 2; i <= a; ++i) pts.push_back(Wi(i));
    if (fam == Family::GU && d % 2) {
      row = "PGU_{2a+1}";
      B = start(spec, "1", row);
      elt mu = K.solve_trace(K.neg(1));
      B.provenance.chosen_params["mu"] = estr(K, mu);
      pts.push_back(L.span({sum(L, {L.e(1), L.sc(mu, L.f(1)), L.x()})}));
    } else {
      row = fam == Family::GU ? "PGU_{2a}" : "PSp_{2a}";
      B = start(spec, "1", row);
    }
  } else {
    for (int i = 2; i <= a; ++i) pts.push_back(Vi(i));
    for (int j = 2; j <= a - 1; ++j) pts.push_back(Wi(j));
    auto T = [&] { return sum(L, {L.neg(L.e(1)), L.f(1), L.x()}); };
    if (fam == Family::GOplus) {
      row = "PGO+_{2a}";
      B = start(spec, "1", row);
    } else if (fam == Family::GOcirc) {
      row = "PGO_{2a+1}";
      B = start(spec, "1", row);
      pts.push_back(L.span({T()}));
    } else {
      row = "PGO-_{2a+2}";
      B = start(spec, "1", row);
      elt z = G.form.zeta;
      B.provenance.chosen_params["zeta"] = estr(K, z);
      pts.push_back(L.span({T()}));
      pts.push_back(L.span({sum(L, {L.neg(L.sc(z, L.e(1))), L.f(1), L.y()})}));
    }
  }
  if (a < 2) B.provenance.notes.push_back("index ranges 2..a are empty");
  B.points = pts;
  finish(B);
  return B;
}

BaseCandidate table2_base(Family fam, int d, int q) {
  check_admissible(fam, d, q);
  ActionSpec spec = ActionSpec::singular(fam, d, q, 2);
  const MatrixGroup& G = build_group(fam, d, q);
  Lin L(G.form);
  const Field& K = L.K;
  BaseCandidate B;
  if (fam == Family::GL) {
    if (d < 4) throw Error(Errc::Inadmissible, "table 2 linear rows need d >= 4");
    auto v = [&](int i) { return L.v(i > d ? i - d : i); };
    if (d == 4) {
      B = start(spec, "2", "PGL_4");
      B.points = {L.span({v(1), v(2)}), L.span({v(3), v(4)}), L.span({L.add(v(1), v(3)), v(2)}),
                  L.span({v(2), v(4)}), L.span({L.add(v(1), v(2)), v(3)})};
    } else {
      B = start(spec, "2", "PGL_d, d >= 5");
      int a = (d + 1) / 2;
      for (int i = 1; i <= a; ++i) B.points.push_back(L.span({v(2 * i - 1), v(2 * i)}));
      Vec odd(d, 0), even(d, 0);
      for (int i = 1; i <= 2 * a - 1; i += 2) odd = L.add(odd, v(i));
      for (int i = 2; i <= 2 * a - 2; i += 2) even = L.add(even, v(i));
      B.points.push_back(L.span({odd, even}));
      B.points.push_back(L.span({v(1), sum(L, {v(3), v(2 * a - 2), v(d)})}));
    }
    finish(B);
    return B;
  }
  if (is_orthogonal(fam) && d < 7) throw Error(Errc::Inadmissible, "table 2 orthogonal rows need d >= 7");
  if (d < 4) throw Error(Errc::Inadmissible, "table 2 needs d >= 4");
  int a = (d + 1) / 2;
  auto V1 = [&] { return L.span({L.e(1), L.e(2)}); };
  auto V2 = [&] { return L.span({L.f(1), L.f(2)}); };
  auto Wi = [&](int i) { return L.span({L.add(L.e(1), L.e(i)), sum(L, {L.e(2), L.neg(L.f(1)), L.f(i)})}); };
  auto A = [&] {
    std::vector<Subspace> r = {V1(), V2()};
    for (int i = 3; i <= a - 1; ++i) r.push_back(Wi(i));
    return r;
  };
  if (fam == Family::GU && d == 4) {
    B = start(spec, "2", "PGU_4");
    elt mu = K.solve_trace(0, true);
    B.provenance.chosen_params["mu"] = estr(K, mu);
    B.points = {V1(), V2(), L.span({L.add(L.e(1), L.sc(mu, L.f(1))), L.add(L.e(2), L.sc(mu, L.f(2)))}),
                L.span({L.e(1), L.f(2)}), L.span({L.sub(L.e(1), L.e(2)), L.add(L.f(1), L.f(2))})};
  } else if (fam == Family::Sp && d == 4) {
    bool even = q % 2 == 0;
    B = start(spec, "2", even ? "PSp_4, q even" : "PSp_4, q odd");
    B.points = {V1(), V2(), L.span({sum(L, {L.e(1), L.f(1), L.f(2)}), L.add(L.e(2), L.f(1))})};
    if (even)
      B.points.push_back(L.span({L.add(L.e(1), L.f(2)), sum(L, {L.e(2), L.f(1), L.f(2)})}));
    else
      B.points.push_back(L.span({L.add(L.e(1), L.f(2)), L.add(L.e(2), L.f(1))}));
  } else if (fam == Family::GU && d == 5) {
    B = start(spec, "2", "PGU_5");
    elt lam = K.solve_trace(1);
    B.provenance.chosen_params["lambda"] = estr(K, lam);
    B.points = {V1(), V2(), L.span({sum(L, {L.neg(L.e(2)), L.sc(lam, L.f(2)), L.x()}), L.f(1)}),
                L.span({sum(L, {L.neg(L.e(1)), L.sc(lam, L.f(1)), L.x()}), L.f(2)})};
  } else if ((fam == Family::Sp || fam == Family::GU) && d == 6) {
    B = start(spec, "2", fam == Family::Sp ? "PSp_6" : "PGU_6");
    B.points = {V1(), V2(), L.span({L.add(L.e(1), L.e(3)), sum(L, {L.e(2), L.neg(L.f(1)), L.f(3)})}),
                L.span({L.sub(L.e(1), L.e(2)), L.add(L.f(1), L.f(2))})};
  } else if (d % 2 == 0 && (fam == Family::GU || fam == Family::Sp || fam == Family::GOplus)) {
    if (a < 4) throw Error(Errc::Inadmissible, "row needs a >= 4");
    B = start(spec, "2", "PGU/PSp/PGO+_{2a}, a >= 4");
    B.points = A();
    B.points.push_back(L.span({L.add(L.e(1), L.e(a)), sum(L, {L.e(2), L.neg(L.e(a)), L.neg(L.f(1)), L.f(2), L.f(a)})}));
  } else if (fam == Family::GU) {
    if (a < 4) throw Error(Errc::Inadmissible, "row needs a >= 4");
    B = start(spec, "2", "PGU_{2a-1}");
    elt lam = K.solve_trace(1);
    B.provenance.chosen_params["lambda"] = estr(K, lam);
    B.points = A();
    B.points.push_back(L.span({sum(L, {L.neg(L.e(1)), L.sc(lam, L.f(1)), L.x()}), L.add(L.e(3), L.f(2))}));
  } else if (fam == Family::GOcirc) {
    B = start(spec, "2", "PGO_{2a-1}");
    if (d == 7) B.provenance.notes.push_back("d = 7 read as the PGO_{2a-1} row with a = 4");
    B.points = A();
    B.points.push_back(L.span({sum(L, {L.neg(L.e(1)), L.f(1), L.x()}), L.add(L.e(3), L.f(2))}));
  } else if (fam == Family::GOminus) {
    if (a < 4) throw Error(Errc::Inadmissible, "row needs a >= 4");
    B = start(spec, "2", "PGO-_{2a}");
    elt z = G.form.zeta;
    B.provenance.chosen_params["zeta"] = estr(K, z);
    B.points = A();
    B.points.push_back(L.span({sum(L, {L.neg(L.e(1)), L.e(2), L.f(1), L.x()}),
                               sum(L, {L.neg(L.sc(z, L.e(1))), L.f(1), L.sc(z, L.f(2)), L.y()})}));
  } else {
    throw Error(Errc::Inadmissible, "no table 2 row");
  }
  finish(B);
  return B;
}

Matrix unitary_orthonormal_basis(const ClassicalForm& C) {
  if (C.kind != FormKind::Unitary) throw Error(Errc::KindMismatch, "orthonormal basis needs a unitary form");
  const Field& K = C.field();
  int q = K.sub_order();
  Matrix P(C.d);
  std::vector<Vec> got;
  std::uint64_t N = 1;
  for (int i = 0; i < C.d; ++i) N *= K.order();
  for (std::uint64_t idx = 1; idx < N && int(got.size()) < C.d; ++idx) {
    Vec v = vec_from_index(K, idx, C.d);
    bool ok = true;
    for (auto& w : got)
      if (C.B(v, w) != 0) { ok = false; break; }
    if (!ok) continue;
    elt n = C.B(v, v);
    if (n == 0) continue;
    elt want = K.inv(n);
    elt c = 0;
    for (int t = 1; t < K.order(); ++t)
      if (K.pow(elt(t), q + 1) == want) { c = elt(t); break; }
    got.push_back(vscale(K, c, v));
  }
  if (int(got.size()) != C.d) throw Error(Errc::Incomplete, "orthonormal scan failed");
  for (int i = 0; i < C.d; ++i)
    for (int j = 0; j < C.d; ++j) P(i, j) = got[i][j];
  return P;
}

BaseCandidate table_n1_base(Family fam, int d, int q, Sign sign) {
  check_admissible(fam, d, q);
  const MatrixGroup& G = build_group(fam, d, q);
  Lin L(G.form);
  const Field& K = L.K;
  BaseCandidate B;
  if (fam == Family::GU) {
    ActionSpec spec = ActionSpec::nondeg(fam, d, q, 1, Sign::None);
    if (d < 3) throw Error(Errc::Inadmissible, "unitary 1-space row needs d >= 3");
    Matrix P = unitary_orthonormal_basis(G.form);
    auto v = [&](int i) { return P.row(i - 1); };
    if (d % 2 == 1 || q > 2) {
      B = start(spec, "n1", "d odd or q > 2");
      elt al = K.primitive();
      elt mu = 0;
      elt dm1 = K.from_int(d - 1);
      for (elt c : {al, K.inv(al), K.mul(al, al)})
        if (K.add(dm1, K.pow(c, q + 1)) != 0) { mu = c; break; }
      if (!mu) throw Error(Errc::BadParams, "no admissible mu");
      B.provenance.chosen_params["mu"] = estr(K, mu);
      Vec s(d, 0);
      for (int i = 1; i <= d - 1; ++i) {
        B.points.push_back(L.span({v(i)}));
        s = L.add(s, v(i));
      }
      B.points.push_back(L.span({L.add(s, L.sc(mu, v(d)))}));
    } else {
      B = start(spec, "n1", "d even, q = 2");
      B.points = {L.span({v(1)}), L.span({v(2)})};
      for (int i = 3; i <= d; ++i) B.points.push_back(L.span({sum(L, {v(1), v(2), v(i)})}));
    }
    std::ostringstream os;
    for (int i = 0; i < d; ++i) os << (i ? ";" : "") << str(K, P.row(i));
    B.provenance.chosen_params["orthonormal_basis"] = os.str();
    finish(B);
    return B;
  }
  if (!is_orthogonal(fam)) throw Error(Errc::Inadmissible, "no 1-space table row for this family");
  if (sign == Sign::None) sign = Sign::Plus;
  ActionSpec spec = q % 2 ? ActionSpec::nondeg(fam, d, q, 1, sign) : ActionSpec::nonsingular1(fam, d, q);
  if (q % 2 == 0) sign = fam == Family::GOcirc ? sign : Sign::Plus;
  int a = G.form.a;
  auto w = [&](int k, elt nu) { return L.sub(L.e(k), L.sc(nu, L.f(k))); };
  if (d % 2 == 0) {
    // perp is odd dimensional; for q odd take the orbit with square Q(v)
    if (q % 2 && sign != Sign::Plus)
      throw Error(Errc::Inadmissible, "even-dimensional rows use the orbit with square Q(v)");
    if (fam == Family::GOminus && d == 4) {
      if (q == 3) throw Error(Errc::Inadmissible, "(4,o,-) row excludes q = 3");
      B = start(spec, "n1", "(4,o,-), q != 3");
    } else if (fam == Family::GOplus && d >= 6) {
      B = start(spec, "n1", "(>=6,o,+)");
      Vec w1 = w(1, K.neg(1));
      B.points.push_back(L.span({w1}));
      for (int i = 2; i <= a; ++i) B.points.push_back(L.span({L.add(w1, L.e(i))}));
      for (int j = 2; j <= a - 1; ++j) B.points.push_back(L.span({L.add(w1, L.f(j))}));
      B.points.push_back(L.span({L.add(L.e(1), w(2, K.neg(1)))}));
      finish(B);
      return B;
    } else if (fam == Family::GOminus && d >= 6 && q == 3) {
      B = start(spec, "n1", "(>=6,o,-), q = 3");
      B.points.push_back(L.span({L.x()}));
      for (int i = 1; i <= a; ++i) B.points.push_back(L.span({L.add(L.e(i), L.x())}));
      B.points.push_back(L.span({L.add(w(1, 1), L.y())}));
      for (int j = 1; j <= a - 1; ++j) B.points.push_back(L.span({L.add(L.f(j), L.x())}));
      finish(B);
      return B;
    } else if (fam == Family::GOminus && d >= 6) {
      B = start(spec, "n1", "(>=6,o,-), q != 3");
    } else {
      throw Error(Errc::Inadmissible, "no 1-space table row");
    }
    // rows using v1, v2 in <x, y>
    std::vector<Vec> vs;
    for (int s = 0; s < K.order() && vs.size() < 2; ++s) {
      Vec v = L.add(L.sc(elt(s), L.x()), L.y());
      elt Qv = G.form.Q(v);
      if (Qv != 0 && K.is_square(Qv)) vs.push_back(v);
    }
    if (vs.size() < 2) throw Error(Errc::BadParams, "not enough square vectors in <x, y>");
    B.provenance.chosen_params["v1"] = str(K, vs[0]);
    B.provenance.chosen_params["v2"] = str(K, vs[1]);
    B.points.push_back(L.span({L.x()}));
    B.points.push_back(L.span({vs[0]}));
    if (d == 4) {
      B.points.push_back(L.span({L.add(L.e(1), vs[1])}));
    } else {
      for (int i = 1; i <= a; ++i) B.points.push_back(L.span({L.add(L.e(i), vs[1])}));
      for (int j = 1; j <= a - 1; ++j) B.points.push_back(L.span({L.add(L.f(j), L.x())}));
    }
    finish(B);
    return B;
  }
  // odd d, q odd: sign is the type of the perp
  if (q % 2 == 0) throw Error(Errc::Inadmissible, "odd-dimensional rows need q odd");
  if (d < 5) throw Error(Errc::Inadmissible, "odd-dimensional rows need d >= 5");
  if (sign == Sign::Plus) {
    B = start(spec, "n1", d == 5 ? "(5,+,o)" : "(>=7,+,o)");
    B.points.push_back(L.span({L.x()}));
    for (int i = 1; i <= a; ++i) B.points.push_back(L.span({L.add(L.e(i), L.x())}));
    for (int j = 1; j <= a - 1; ++j) B.points.push_back(L.span({L.add(L.f(j), L.x())}));
  } else {
    B = start(spec, "n1", d == 5 ? "(5,-,o)" : "(>=7,-,o)");
    elt al = find_alpha(K);
    B.provenance.chosen_params["alpha"] = estr(K, al);
    Vec w1 = w(1, al);
    B.points.push_back(L.span({w1}));
    if (d == 5) {
      B.points.push_back(L.span({L.add(w1, L.e(2))}));
      B.points.push_back(L.span({L.add(w1, L.f(2))}));
    } else {
      for (int i = 2; i <= a; ++i) B.points.push_back(L.span({L.add(w1, L.e(i))}));
      for (int j = 2; j <= a - 1; ++j) B.points.push_back(L.span({L.add(w1, L.f(j))}));
    }
    B.points.push_back(L.span({L.add(w(2, al), L.e(1))}));
    B.points.push_back(L.span({sum(L, {w(2, K.add(1, al)), L.f(1), L.x()})}));
  }
  finish(B);
  return B;
}

BaseCandidate table3_table4_base(Family fam, int d, int q, Sign sign) {
  check_admissible(fam, d, q);
  if (fam == Family::GL) throw Error(Errc::Inadmissible, "no form for GL");
  if (!is_orthogonal(fam)) sign = Sign::None;
  else if (sign == Sign::None) sign = Sign::Plus;
  if (d < 5) throw Error(Errc::Inadmissible, "tables 3/4 need d >= 5");
  if (is_orthogonal(fam) && d < 7) throw Error(Errc::Inadmissible, "orthogonal rows need d >= 7");
  ActionSpec spec = ActionSpec::nondeg(fam, d, q, 2, sign);
  const MatrixGroup& G = build_group(fam, d, q);
  Lin L(G.form);
  const Field& K = L.K;
  int a = (d + 1) / 2;
  BaseCandidate B;
  if (sign != Sign::Minus) {
    auto A = [&] {
      std::vector<Subspace> r = {L.span({L.e(1), L.f(1)}), L.span({L.e(2), L.add(L.f(1), L.f(2))})};
      for (int i = 3; i <= a - 1; ++i) r.push_back(L.span({L.add(L.e(1), L.e(i)), L.add(L.f(2), L.f(i))}));
      return r;
    };
    if ((fam == Family::Sp || fam == Family::GU) && d == 6) {
      if (q % 2 == 0) throw Error(Errc::Inadmissible, "d = 6 rows are listed for q odd only");
      B = start(spec, "3", fam == Family::Sp ? "PSp_6, q odd" : "PGU_6, q odd");
      B.points = A();
      B.points.push_back(L.span({L.add(L.e(1), L.e(3)), L.add(L.f(2), L.f(3))}));
      B.points.push_back(L.span({L.add(L.e(1), L.e(2)), sum(L, {L.e(1), L.f(2), L.f(3)})}));
    } else if (d % 2 == 0 && fam != Family::GOminus) {
      if (a < 4) throw Error(Errc::Inadmissible, "row needs a >= 4");
      B = start(spec, "3", q % 2 ? "PGU/PSp/PGO+, q odd, a >= 4" : "PGU/PSp/PGO+, q even, a >= 4");
      B.points = A();
      if (q % 2 == 0)
        B.points.push_back(L.span({sum(L, {L.e(2), L.e(a), L.f(1)}), sum(L, {L.e(1), L.f(2), L.f(a)})}));
      else
        B.points.push_back(L.span({L.add(L.e(a), L.f(1)), sum(L, {L.e(2), L.f(1), L.f(a)})}));
    } else if (fam == Family::GOminus) {
      if (a < 4) throw Error(Errc::Inadmissible, "row needs a >= 4");
      B = start(spec, "3", "PGO-_{2a}, a >= 4");
      elt z = G.form.zeta;
      B.provenance.chosen_params["zeta"] = estr(K, z);
      B.points = A();
      B.points.push_back(L.span({sum(L, {L.e(1), L.neg(L.f(1)), L.x()}), sum(L, {L.sc(z, L.e(2)), L.neg(L.f(2)), L.y()})}));
    } else if (fam == Family::GU) {
      B = start(spec, "3", "PGU_{2a-1}, a >= 3");
      elt lam = K.solve_trace(1);
      B.provenance.chosen_params["lambda"] = estr(K, lam);
      B.points = A();
      B.points.push_back(L.span({sum(L, {L.sc(lam, L.e(1)), L.neg(L.f(1)), L.x()}),
                                 sum(L, {L.sc(lam, L.e(2)), L.neg(L.f(2)), L.x()})}));
    } else if (fam == Family::GOcirc) {
      if (a < 4) throw Error(Errc::Inadmissible, "row needs a >= 4");
      B = start(spec, "3", "PGO_{2a-1}, a >= 4");
      B.points = A();
      B.points.push_back(L.span({sum(L, {L.e(1), L.neg(L.f(1)), L.x()}), sum(L, {L.e(2), L.neg(L.f(2)), L.x()})}));
    } else {
      throw Error(Errc::Inadmissible, "no table 3 row");
    }
    B.spec = spec;
    finish(B);
    return B;
  }
  // table 4
  if (a < 4) throw Error(Errc::Inadmissible, "table 4 rows need a >= 4");
  elt z = fam == Family::GOminus ? G.form.zeta : K.find_zeta();
  std::vector<Subspace> A = {L.span({L.add(L.e(1), L.f(1)), sum(L, {L.e(2), L.f(1), L.sc(z, L.f(2))})})};
  if (z != 1)
    A.push_back(L.span({sum(L, {L.e(2), L.f(1), L.f(2)}), L.add(L.e(1), L.sc(z, L.f(1)))}));
  else
    A.push_back(L.span({sum(L, {L.e(1), L.f(1), L.f(2)}), L.add(L.e(2), L.f(2))}));
  for (int i = 3; i <= a - 1; ++i)
    A.push_back(L.span({sum(L, {L.e(1), L.e(i), L.f(1)}), sum(L, {L.e(2), L.sc(z, L.e(i)), L.f(i)})}));
  if (fam == Family::GOcirc) {
    B = start(spec, "4", "PGO_{2a-1}");
    B.points = A;
    B.points.push_back(L.span({sum(L, {L.e(2), L.f(1), L.x()}), sum(L, {L.e(1), L.e(3), L.sc(z, L.f(3))})}));
  } else if (fam == Family::GOplus) {
    B = start(spec, "4", "PGO+_{2a}");
    B.points = A;
    B.points.push_back(L.span({sum(L, {L.e(1), L.e(2), L.f(2), L.f(a)}), sum(L, {L.e(3), L.f(1), L.sc(z, L.f(3))})}));
  } else {
    B = start(spec, "4", "PGO-_{2a}");
    B.points = A;
    B.points.push_back(L.span({L.add(L.sub(L.e(1), L.e(3)), L.x()), sum(L, {L.f(1), L.f(3), L.y()})}));
  }
  B.provenance.chosen_params["zeta"] = estr(K, z);
  finish(B);
  return B;
}

BaseCandidate table6_base(int m, int q, Sign sign) {
  if (q % 2) throw Error(Errc::OddQ, "table 6 needs q even");
  if (m < 2) throw Error(Errc::Inadmissible, "table 6 needs m >= 2");
  if (sign != Sign::Minus) sign = Sign::Plus;
  ActionSpec spec = ActionSpec::coset(m, q, sign);
  const MatrixGroup& G = acting_group(spec);
  Lin L(G.form);
  const Field& K = L.K;
  elt zeta = K.find_zeta();
  elt lam = K.sqrt(zeta);
  auto Ai = [&](int i) { return std::vector<Vec>{L.e(i), L.f(i)}; };
  auto Bi = [&](int i) { return std::vector<Vec>{L.add(L.e(i), L.x()), L.add(L.f(i), L.sc(lam, L.x()))}; };
  auto Ui = [&](int i) { return std::vector<Vec>{L.e(i), L.add(L.f(i), L.x())}; };
  auto Vj = [&](int j) { return std::vector<Vec>{L.add(L.e(j), L.x()), L.f(j)}; };
  // blocks[i-1] is the i-th summand; build the direct sum
  auto build = [&](std::vector<std::vector<Vec>> blocks) {
    std::vector<Vec> rows;
    for (auto& b : blocks) rows.insert(rows.end(), b.begin(), b.end());
    return L.span(rows);
  };
  std::vector<std::vector<Vec>> base;
  for (int i = 1; i <= m; ++i) base.push_back(Ai(i));
  BaseCandidate B = start(spec, "6", sign == Sign::Plus ? "N+" : "N-");
  B.provenance.chosen_params["lambda"] = estr(K, lam);
  B.provenance.chosen_params["zeta"] = estr(K, zeta);
  if (sign == Sign::Plus) {
    B.points.push_back(build(base));
    for (int i = 1; i <= m; ++i) {
      auto bl = base;
      bl[i - 1] = Ui(i);
      B.points.push_back(build(bl));
    }
    for (int j = 1; j <= m - 1; ++j) {
      auto bl = base;
      bl[j - 1] = Vj(j);
      B.points.push_back(build(bl));
    }
  } else {
    auto bb = base;
    bb[0] = Bi(1);
    B.points.push_back(build(bb));
    for (int i = 2; i <= m; ++i) {
      auto bl = bb;
      bl[i - 1] = Ui(i);
      B.points.push_back(build(bl));
    }
    for (int j = 2; j <= m - 1; ++j) {
      auto bl = bb;
      bl[j - 1] = Vj(j);
      B.points.push_back(build(bl));
    }
    auto w1 = base;
    w1[1] = Bi(2);
    B.points.push_back(build(w1));
    auto w2 = w1;
    w2[0] = Ui(1);
    B.points.push_back(build(w2));
    B.provenance.notes.push_back("V_j read with A_j replaced");
  }
  finish(B);
  return B;
}

BaseCandidate table_base(const std::string& table, Family f, int d, int q, Sign sign) {
  if (table == "1") return table1_base(f, d, q);
  if (table == "2") return table2_base(f, d, q);
  if (table == "n1" || table == "N1") return table_n1_base(f, d, q, table_sign("n1", f, sign));
  if (table == "3" || table == "4") return table3_table4_base(f, d, q, table_sign(table, f, sign));
  if (table == "6") {
    if (d % 2 == 0) throw Error(Errc::BadParams, "table 6 takes d = 2m+1");
    return table6_base((d - 1) / 2, q, table_sign("6", f, sign));
  }
  throw Error(Errc::BadParams, "unknown table '" + table + "'");
}

std::string dump_candidate(const BaseCandidate& B) {
  const Field& K = acting_group(B.spec).field();
  std::ostringstream os;
  os << "# table " << B.provenance.table << " row " << B.provenance.row << ": " << B.spec.describe() << "\n";
  for (auto& [k, v] : B.provenance.chosen_params) os << "# " << k << " = " << v << "\n";
  for (auto& n : B.provenance.notes) os << "# note: " << n << "\n";
  for (auto& U : B.points) os << str(K, U) << "\n";
  return os.str();
}

}  // namespace bw
