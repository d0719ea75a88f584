#include "report.hpp"

#include <json.hpp>

#include "orbitcodes/version.hpp"

namespace orbitcodes {

using nlohmann::json;

namespace {

json multiset_to_json(const DifferenceMultiset& d) {
  json pairs = json::array();
  for (const auto& [a, m] : d.multiplicity) pairs.push_back({a, m});
  return {{"modulus", d.modulus}, {"multiplicity", pairs}};
}

DifferenceMultiset multiset_from_json(const json& j) {
  DifferenceMultiset d;
  d.modulus = j.at("modulus").get<std::uint64_t>();
  for (const auto& pair : j.at("multiplicity")) {
    d.multiplicity[pair.at(0).get<std::uint64_t>()] = pair.at(1).get<std::uint64_t>();
  }
  return d;
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json report_to_json(const AnalysisReport& r) {
  json orbits = json::array();
  for (const Orbit& o : r.orbits) {
    orbits.push_back({{"representative", o.representative},
                      {"size", o.size},
                      {"members", o.members},
                      {"exponents", o.exponents}});
  }
  json per_orbit = json::array();
  for (const auto& d : r.orbit_differences) per_orbit.push_back(multiset_to_json(d));
  return {
      {"mode", to_string(r.mode)},
      {"q", r.q},
      {"n", r.n},
      {"k", r.k},
      {"generator_order", r.generator_order},
      {"group_order", r.group_order},
      {"exponent_profile", r.exponent_profile},
      {"orbits", orbits},
      {"orbit_differences", per_orbit},
      {"differences", multiset_to_json(r.differences)},
      {"stabilizer_shifts", r.stabilizer_shifts},
      {"predicted_cardinality", r.predicted_cardinality},
      {"max_multiplicity", r.max_multiplicity},
      {"intersection_exponent", r.intersection_exponent},
      {"predicted_distance", optional_to_json(r.predicted_distance)},
      {"spread", r.spread},
      {"distinct_orbits", r.distinct_orbits},
      {"degenerate", r.degenerate},
      {"verified_cardinality", optional_to_json(r.verified_cardinality)},
      {"verified_distance", optional_to_json(r.verified_distance)},
      {"agrees", r.verified() ? json(r.agrees()) : json(nullptr)},
  };
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "primitive") {
    r.mode = AnalysisMode::primitive;
  } else if (mode == "non-primitive") {
    r.mode = AnalysisMode::non_primitive;
  } else {
    throw ParseError("unknown analysis mode '" + mode + "'");
  }
  r.q = j.at("q").get<std::uint64_t>();
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  r.generator_order = j.at("generator_order").get<std::uint64_t>();
  r.group_order = j.at("group_order").get<std::uint64_t>();
  r.exponent_profile = j.at("exponent_profile").get<std::vector<std::uint64_t>>();
  for (const auto& o : j.at("orbits")) {
    r.orbits.push_back({o.at("representative").get<Value>(), o.at("size").get<std::uint64_t>(),
                        o.at("members").get<std::uint64_t>(),
                        o.at("exponents").get<std::vector<std::uint64_t>>()});
  }
  for (const auto& d : j.at("orbit_differences")) r.orbit_differences.push_back(multiset_from_json(d));
  r.differences = multiset_from_json(j.at("differences"));
  r.stabilizer_shifts = j.at("stabilizer_shifts").get<std::vector<std::uint64_t>>();
  r.predicted_cardinality = j.at("predicted_cardinality").get<std::uint64_t>();
  r.max_multiplicity = j.at("max_multiplicity").get<std::uint64_t>();
  r.intersection_exponent = j.at("intersection_exponent").get<unsigned>();
  r.predicted_distance = optional_from_json<unsigned>(j.at("predicted_distance"));
  r.spread = j.at("spread").get<bool>();
  r.distinct_orbits = j.at("distinct_orbits").get<bool>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.verified_cardinality = optional_from_json<std::uint64_t>(j.at("verified_cardinality"));
  r.verified_distance = optional_from_json<unsigned>(j.at("verified_distance"));
  return r;
}

}  // namespace

namespace cli {

std::string serialize(const ReportDocument& doc) {
  json j = {
      {"schema_version", doc.schema_version},
      {"tool", {{"name", kToolName}, {"version", doc.tool_version}}},
      {"field", {{"q", doc.q}, {"p", doc.p}, {"base_modulus", optional_to_json(doc.base_modulus)}}},
      {"polynomial", doc.polynomial},
      {"start", doc.start},
      {"oracle_run", doc.oracle_run},
      {"analysis", report_to_json(doc.analysis)},
  };
  return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
  try {
    const json j = json::parse(text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kReportSchemaVersion) {
      throw ParseError("unsupported report schema version " + std::to_string(doc.schema_version));
    }
    doc.tool_version = j.at("tool").at("version").get<std::string>();
    doc.q = j.at("field").at("q").get<std::uint64_t>();
    doc.p = j.at("field").at("p").get<std::uint32_t>();
    doc.base_modulus = optional_from_json<std::string>(j.at("field").at("base_modulus"));
    doc.polynomial = j.at("polynomial").get<std::string>();
    doc.start = j.at("start").get<std::vector<std::string>>();
    doc.oracle_run = j.at("oracle_run").get<bool>();
    doc.analysis = report_from_json(j.at("analysis"));
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cli
}  // namespace orbitcodes
