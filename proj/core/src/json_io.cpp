#include "lpcoh/json_io.hpp"

namespace lpcoh {

namespace {

[[noreturn]] void schema_fail(const std::string& what) {
  fail(ErrorKind::ParseError, "bad JSON payload: " + what);
}

long long get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) schema_fail(std::string(key));
  return j[key].get<long long>();
}

std::string get_str(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) schema_fail(std::string(key));
  return j[key].get<std::string>();
}

RootFamily family_from_name(const std::string& s) {
  if (s == "A") return RootFamily::A;
  if (s == "B") return RootFamily::B;
  if (s == "C") return RootFamily::C;
  if (s == "D") return RootFamily::D;
  if (s == "E") return RootFamily::E;
  if (s == "F") return RootFamily::F;
  if (s == "G") return RootFamily::G;
  if (s == "BC") return RootFamily::BC;
  schema_fail("unknown root family '" + s + "'");
}

}  // namespace

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const json& j) {
  return Rational(get_int(j, "num"), get_int(j, "den"));
}

json to_json(const Root& root) {
  return json{{"ambient", root.ambient},
              {"coeffs", root.simple_coeffs},
              {"sq_length", root.sq_length}};
}

json to_json(const RootSystem& rs, bool full) {
  json j;
  j["type"] = rs.type.name();
  j["rank"] = rs.rank();
  j["count"] = rs.positive.size();
  json classes = json::object();
  for (const auto& [len, idx] : length_classes(rs))
    classes[std::to_string(len)] = idx.size();
  j["length_classes"] = classes;
  if (full) {
    json simple = json::array();
    for (const Root& r : rs.simple) simple.push_back(r.ambient);
    j["simple"] = simple;
    json positive = json::array();
    for (const Root& r : rs.positive) positive.push_back(to_json(r));
    j["positive"] = positive;
  }
  return j;
}

json to_json(const GoodRootReport& report) {
  json coeffs = json::object();
  for (const auto& [i, m] : report.per_root_max_coeff) coeffs[std::to_string(i)] = m;
  return json{{"type", report.rs_type.name()},
              {"good_roots", report.good_roots},
              {"per_root_max_coeff", coeffs}};
}

GoodRootReport good_root_report_from_json(const json& j) {
  GoodRootReport report{RootSystemType::parse(get_str(j, "type")), {}, {}};
  for (const auto& v : j.at("good_roots")) report.good_roots.push_back(v.get<int>());
  for (const auto& [key, value] : j.at("per_root_max_coeff").items())
    report.per_root_max_coeff[std::stoi(key)] = value.get<long long>();
  return report;
}

json to_json(const StripReport& report) {
  json alts = json::array();
  for (const auto& [gamma, dm1] : report.alternatives)
    alts.push_back(json{{"gamma", gamma}, {"d_minus_1", dm1}});
  return json{{"group", report.group.render()},
              {"chosen_gamma", report.chosen_gamma},
              {"psi_size", report.psi_size},
              {"d_minus_1", report.d_minus_1},
              {"d", report.d},
              {"D", report.D},
              {"width", report.width},
              {"proportion", to_json(report.proportion)},
              {"alternatives", alts}};
}

StripReport strip_report_from_json(const json& j) {
  StripReport report;
  report.group = parse_group(get_str(j, "group"));
  report.chosen_gamma = static_cast<int>(get_int(j, "chosen_gamma"));
  report.psi_size = get_int(j, "psi_size");
  report.d_minus_1 = get_int(j, "d_minus_1");
  report.d = get_int(j, "d");
  report.D = get_int(j, "D");
  report.width = get_int(j, "width");
  report.proportion = rational_from_json(j.at("proportion"));
  for (const auto& a : j.at("alternatives"))
    report.alternatives.emplace_back(static_cast<int>(get_int(a, "gamma")),
                                     get_int(a, "d_minus_1"));
  return report;
}

json to_json(const HypStatus& st) {
  return json{{"zero", st.zero}, {"hausdorff", st.hausdorff}, {"reduced_zero", st.reduced_zero}};
}

HypStatus hyp_status_from_json(const json& j) {
  HypStatus st;
  st.zero = j.at("zero").get<bool>();
  st.hausdorff = j.at("hausdorff").get<bool>();
  st.reduced_zero = j.at("reduced_zero").get<bool>();
  return st;
}

json to_json(const CohomologyStatus& st) {
  json j{{"verdict", verdict_name(st.verdict)}, {"reason", reason_name(st.reason)}};
  if (st.concentration_degree) j["concentration_degree"] = *st.concentration_degree;
  return j;
}

CohomologyStatus cohomology_status_from_json(const json& j) {
  CohomologyStatus st;
  std::string v = get_str(j, "verdict");
  if (v == "VanishesUnreduced") st.verdict = Verdict::VanishesUnreduced;
  else if (v == "VanishesReducedOnly") st.verdict = Verdict::VanishesReducedOnly;
  else if (v == "Unknown") st.verdict = Verdict::Unknown;
  else schema_fail("verdict '" + v + "'");
  std::string r = get_str(j, "reason");
  bool found = false;
  for (Reason reason : {Reason::DegreeZero, Reason::DegreeAtLeastD, Reason::DegreeOneCorollary,
                        Reason::LowerTail, Reason::UpperTail, Reason::ReducedBand,
                        Reason::InsideStrip}) {
    if (r == reason_name(reason)) {
      st.reason = reason;
      found = true;
    }
  }
  if (!found) schema_fail("reason '" + r + "'");
  if (j.contains("concentration_degree"))
    st.concentration_degree = j["concentration_degree"].get<long long>();
  return st;
}

json to_json(const ClassifiedEntry& entry) {
  return json{{"group", entry.entry.display},
              {"rep", entry.entry.rep.render()},
              {"cartan", entry.entry.cartan_label},
              {"rank", entry.entry.rank},
              {"parametrized_q", entry.entry.parametrized_q},
              {"relative", entry.report.rs_type.name()},
              {"admissible", entry.admissible},
              {"good_roots", entry.report.good_roots}};
}

json to_json(const MultDatabase& db) {
  json arr = json::array();
  for (const MultRule& rule : db) {
    json mult = json::object();
    for (const auto& [name, value] : rule.mult) {
      bool numeric = !value.empty() && value.find_first_not_of("0123456789") == std::string::npos;
      if (numeric)
        mult[name] = std::stoll(value);
      else
        mult[name] = value;
    }
    arr.push_back(json{{"family", rule.key},
                       {"cartan_label", rule.cartan_label},
                       {"rs_family", std::string(family_name(rule.rs_family))},
                       {"rank_param", rule.rank_param},
                       {"mult", mult},
                       {"verified", rule.verified}});
  }
  return arr;
}

MultDatabase database_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidDatabase, "database must be a JSON array");
  MultDatabase db;
  for (const json& row : j) {
    MultRule rule;
    rule.key = get_str(row, "family");
    rule.cartan_label = get_str(row, "cartan_label");
    rule.rs_family = family_from_name(get_str(row, "rs_family"));
    rule.rank_param = get_str(row, "rank_param");
    if (!row.contains("mult") || !row["mult"].is_object())
      fail(ErrorKind::InvalidDatabase, "rule '" + rule.key + "' has no mult object");
    for (const auto& [name, value] : row["mult"].items()) {
      if (value.is_number_integer())
        rule.mult[name] = std::to_string(value.get<long long>());
      else if (value.is_string())
        rule.mult[name] = value.get<std::string>();
      else
        fail(ErrorKind::InvalidDatabase, "rule '" + rule.key + "' class '" + name +
                                             "' must be an integer or a formula tag");
    }
    rule.verified = row.contains("verified") ? row["verified"].get<bool>() : true;
    db.push_back(std::move(rule));
  }
  return db;
}

}  // namespace lpcoh
