#include <json.hpp>

#include "basewright/audit.hpp"
#include "basewright/errors.hpp"

namespace bw {

using nlohmann::json;

void to_json(json& j, const VerificationReport& r) {
  json params = json::object();
  for (auto& [k, v] : r.chosen_params) params[k] = v;
  j = json{{"table", r.table},
           {"row", r.row},
           {"instance", {{"family", r.family}, {"d", r.d}, {"q", r.q}, {"k", r.k}, {"sign", r.sign}, {"action", r.action}, {"n", r.n}}},
           {"candidate_size", r.candidate_size},
           {"stabilizer_order", r.stabilizer_order},
           {"verdict", r.pass ? "pass" : "fail"},
           {"method", r.method},
           {"seconds", r.seconds},
           {"provenance", {{"table", r.table}, {"row", r.row}, {"chosen_params", params}, {"notes", r.notes}}},
           {"points", r.points},
           {"error", r.error}};
}

void from_json(const json& j, VerificationReport& r) {
  r.table = j.at("table");
  r.row = j.at("row");
  auto& in = j.at("instance");
  r.family = in.at("family");
  r.d = in.at("d");
  r.q = in.at("q");
  r.k = in.at("k");
  r.sign = in.at("sign");
  r.action = in.at("action");
  r.n = in.at("n");
  r.candidate_size = j.at("candidate_size");
  r.stabilizer_order = j.at("stabilizer_order");
  r.pass = j.at("verdict") == "pass";
  r.method = j.at("method");
  r.seconds = j.at("seconds");
  r.chosen_params.clear();
  for (auto& [k, v] : j.at("provenance").at("chosen_params").items()) r.chosen_params.emplace_back(k, v.get<std::string>());
  r.notes = j.at("provenance").at("notes").get<std::vector<std::string>>();
  r.points = j.at("points").get<std::vector<std::string>>();
  r.error = j.at("error");
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"instance", r.instance},
           {"group", r.group},
           {"category", r.category},
           {"action", r.action},
           {"n", r.n},
           {"order", r.order},
           {"b_upper", r.b_upper},
           {"b_exact", r.b_exact ? json(*r.b_exact) : json(nullptr)},
           {"b_lower", r.b_lower},
           {"ceil_log_n_plus_1", r.ceil_log_n_plus_1},
           {"within_bound", r.within_bound},
           {"exceptional", r.exceptional},
           {"expected_exceptional", r.expected_exceptional},
           {"determined", r.determined},
           {"error", r.error},
           {"seconds", r.seconds}};
}

void from_json(const json& j, SweepRow& r) {
  r.instance = j.at("instance");
  r.group = j.at("group");
  r.category = j.at("category");
  r.action = j.at("action");
  r.n = j.at("n");
  r.order = j.at("order");
  r.b_upper = j.at("b_upper");
  if (j.at("b_exact").is_null()) r.b_exact.reset();
  else r.b_exact = j.at("b_exact").get<int>();
  r.b_lower = j.at("b_lower");
  r.ceil_log_n_plus_1 = j.at("ceil_log_n_plus_1");
  r.within_bound = j.at("within_bound");
  r.exceptional = j.at("exceptional");
  r.expected_exceptional = j.at("expected_exceptional");
  r.determined = j.at("determined");
  r.error = j.at("error");
  r.seconds = j.at("seconds");
}

void to_json(json& j, const DegreeAuditRow& r) {
  j = json{{"instance", r.instance}, {"kind", r.kind}, {"formula", r.formula},
           {"enumerated", r.enumerated}, {"equal", r.equal}, {"error", r.error}};
}

void from_json(const json& j, DegreeAuditRow& r) {
  r.instance = j.at("instance");
  r.kind = j.at("kind");
  r.formula = j.at("formula");
  r.enumerated = j.at("enumerated");
  r.equal = j.at("equal");
  r.error = j.at("error");
}

namespace {

json envelope(const char* kind) { return json{{"schema_version", kReportSchemaVersion}, {"kind", kind}}; }

json parse_checked(const std::string& text, const char* kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, std::string("report parse error: ") + e.what());
  }
  if (j.value("schema_version", -1) != kReportSchemaVersion)
    throw Error(Errc::BadInput, "unsupported report schema version");
  if (j.value("kind", "") != kind) throw Error(Errc::BadInput, std::string("expected a ") + kind + " report");
  return j;
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string to_json(const VerificationReport& r) {
  json j = envelope("verification");
  j["reports"] = json::array({r});
  return j.dump(2);
}

std::string to_json(const std::vector<VerificationReport>& r) {
  json j = envelope("verification");
  j["reports"] = r;
  return j.dump(2);
}

std::string to_json(const SweepSummary& s) {
  json j = envelope("sweep");
  j["rows"] = s.rows;
  j["all_within_bound"] = s.all_within_bound;
  j["exceptional_matches"] = s.exceptional_matches;
  j["all_determined"] = s.all_determined;
  j["strict_violators"] = s.strict_violators;
  j["unexpected"] = s.unexpected;
  j["pass"] = s.pass();
  return j.dump(2);
}

std::string to_json(const std::vector<DegreeAuditRow>& r) {
  json j = envelope("degree-audit");
  j["rows"] = r;
  return j.dump(2);
}

std::string to_json(const BaseCandidate& B) {
  const Field& K = acting_group(B.spec).field();
  json j = envelope("candidate");
  json params = json::object();
  for (auto& [k, v] : B.provenance.chosen_params) params[k] = v;
  j["provenance"] = {{"table", B.provenance.table}, {"row", B.provenance.row}, {"d", B.provenance.d},
                     {"q", B.provenance.q}, {"sign", sign_name(B.provenance.sign)}, {"chosen_params", params},
                     {"notes", B.provenance.notes}};
  json pts = json::array();
  for (auto& U : B.points) {
    json rows = json::array();
    for (auto& v : U.basis()) {
      json row = json::array();
      for (elt c : v) row.push_back(K.coords(c));
      rows.push_back(row);
    }
    pts.push_back(rows);
  }
  j["points"] = pts;
  return j.dump(2);
}

VerificationReport verification_from_json(const std::string& text) {
  auto v = verifications_from_json(text);
  if (v.size() != 1) throw Error(Errc::BadInput, "expected exactly one verification report");
  return v[0];
}

std::vector<VerificationReport> verifications_from_json(const std::string& text) {
  json j = parse_checked(text, "verification");
  return guarded([&] { return j.at("reports").get<std::vector<VerificationReport>>(); });
}

SweepSummary sweep_from_json(const std::string& text) {
  json j = parse_checked(text, "sweep");
  return guarded([&] {
    SweepSummary s;
    s.rows = j.at("rows").get<std::vector<SweepRow>>();
    s.all_within_bound = j.at("all_within_bound");
    s.exceptional_matches = j.at("exceptional_matches");
    s.all_determined = j.at("all_determined");
    s.strict_violators = j.at("strict_violators").get<std::vector<std::string>>();
    s.unexpected = j.at("unexpected").get<std::vector<std::string>>();
    return s;
  });
}

std::vector<DegreeAuditRow> degrees_from_json(const std::string& text) {
  json j = parse_checked(text, "degree-audit");
  return guarded([&] { return j.at("rows").get<std::vector<DegreeAuditRow>>(); });
}

}  // namespace bw
