#include <doctest.h>

#include "basewright/audit.hpp"
#include "basewright/errors.hpp"

using namespace bw;

TEST_CASE("log helpers") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(24) == 5);
  CHECK(ceil_log2(32) == 5);
  CHECK(ceil_log2(33) == 6);
  // b >= log2(n) + 1 exactly when 2^(b-1) >= n
  CHECK(at_least_log_plus_one(6, 28));
  CHECK_FALSE(at_least_log_plus_one(5, 28));
  CHECK(at_least_log_plus_one(6, 32));
  CHECK_FALSE(at_least_log_plus_one(6, 33));
}

TEST_CASE("verification report for a passing table row") {
  auto r = verify_table("1", Family::GU, 5, 2);
  CHECK(r.pass);
  CHECK(r.method == "orbit");
  CHECK(r.n == "165");
  CHECK(r.stabilizer_order == "1");
  CHECK(r.candidate_size == r.points.size());
  auto back = verification_from_json(to_json(r));
  CHECK(back == r);
}

TEST_CASE("the two verification engines agree") {
  struct C { const char* t; Family f; int d, q; Sign s; };
  for (auto c : {C{"1", Family::Sp, 6, 2, Sign::None}, C{"2", Family::GL, 4, 3, Sign::None},
                 C{"n1", Family::GOcirc, 5, 3, Sign::Minus}, C{"3", Family::Sp, 8, 2, Sign::None},
                 C{"6", Family::GOcirc, 7, 2, Sign::Plus}}) {
    CAPTURE(c.t);
    auto a = verify_table(c.t, c.f, c.d, c.q, c.s, "orbit");
    auto b = verify_table(c.t, c.f, c.d, c.q, c.s, "commutant");
    CHECK(a.method == "orbit");
    CHECK(b.method == "commutant");
    CHECK(a.stabilizer_order == b.stabilizer_order);
    CHECK(a.pass == b.pass);
  }
}

TEST_CASE("a deliberately weak candidate fails") {
  BaseCandidate B = table1_base(Family::Sp, 6, 2);
  B.points.pop_back();
  auto r = verify_candidate(B);
  CHECK_FALSE(r.pass);
  CHECK(r.stabilizer_order != "1");
}

TEST_CASE("report JSON round trips and rejects bad input") {
  std::vector<VerificationReport> rs = {verify_table("1", Family::Sp, 4, 3), verify_table("2", Family::GL, 4, 3)};
  CHECK(verifications_from_json(to_json(rs)) == rs);
  CHECK_THROWS_AS(verification_from_json("{"), Error);
  CHECK_THROWS_AS(verification_from_json(R"({"schema_version": 99, "kind": "verification"})"), Error);
  CHECK_THROWS_AS(sweep_from_json(to_json(rs[0])), Error);
  CHECK_THROWS_AS(verification_from_json(R"({"schema_version": 1, "kind": "verification"})"), Error);
}

TEST_CASE("degree audit") {
  auto suite = default_degree_suite();
  CHECK(suite.size() >= 20);
  auto rows = audit_degrees({suite.begin(), suite.begin() + 5});
  for (const auto& r : rows) CHECK(r.equal);
  CHECK(degrees_from_json(to_json(rows)) == rows);
}

TEST_CASE("small sweep") {
  SweepOptions o;
  o.max_degree = 120;
  o.threads = 2;
  SweepSummary S = theorem_sweep(o);
  CHECK(S.rows.size() > 10);
  CHECK(S.all_determined);
  CHECK(S.exceptional_matches);
  bool coset = false;
  for (const auto& r : S.rows) {
    REQUIRE(r.b_exact);
    CHECK(*r.b_exact >= r.b_lower);
    CHECK(*r.b_exact <= r.b_upper);
    if (r.instance.find("Sp(6,2)") != std::string::npos && r.category == "coset" && r.n == 28) {
      coset = true;
      CHECK(r.exceptional);
      CHECK(*r.b_exact == 6);
    }
  }
  CHECK(coset);
  SweepSummary back = sweep_from_json(to_json(S));
  CHECK(back.rows == S.rows);
  CHECK(back.strict_violators == S.strict_violators);
  CHECK(S.pass());
}

TEST_CASE("Mathieu rows") {
  MathieuRow r = mathieu_row("M12");
  CHECK(r.order == r.expected_order);
  CHECK(r.order == "95040");
  CHECK(r.lower == 5);
  CHECK(r.greedy >= 5);
}
