#include "agpoly/report.hpp"

#include <algorithm>
#include <sstream>

namespace agpoly {

using nlohmann::json;

json poly_to_json(const LaurentPoly& poly) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back(json::array({e.q, e.z, c.get_str()}));
  return terms;
}

LaurentPoly poly_from_json(const json& terms) {
  if (!terms.is_array()) throw UsageError("terms must be an array");
  LaurentPoly out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3 || !t[2].is_string()) {
      throw UsageError("each term must be [i, j, \"coefficient\"]");
    }
    Integer c;
    if (c.set_str(t[2].get<std::string>(), 10) != 0) throw UsageError("bad coefficient " + t[2].dump());
    out.add_term({t[0].get<int>(), t[1].get<int>()}, c);
  }
  return out;
}

json params_to_json(const Params& p) { return json{{"N", p.N}, {"k", p.k}, {"l", p.l}, {"r", p.r}}; }

Params params_from_json(const json& j) {
  return Params{j.at("N").get<int>(), j.at("k").get<int>(), j.at("l").get<int>(), j.at("r").get<int>()};
}

json rational_to_json(const RationalFn& x) {
  json den = json::array();
  for (const auto& f : x.denominator()) den.push_back(json::array({f.a(), f.b()}));
  return json{{"unit", json::array({x.unit().sign, x.unit().q_exp, x.unit().z_exp})},
              {"numerator", poly_to_json(x.numerator())},
              {"denominator", den}};
}

json to_json(const ComputeResult& result) {
  json j{{"params", params_to_json(result.params)}, {"method", result.method}};
  if (result.cutoff) j["cutoff"] = *result.cutoff;
  j["terms"] = poly_to_json(result.poly);
  j["meta"] = result.meta;
  return j;
}

ComputeResult compute_result_from_json(const json& j) {
  ComputeResult out;
  out.params = params_from_json(j.at("params"));
  out.method = j.at("method").get<std::string>();
  if (j.contains("cutoff")) out.cutoff = j.at("cutoff").get<int>();
  out.poly = poly_from_json(j.at("terms"));
  if (j.contains("meta")) out.meta = j.at("meta");
  return out;
}

std::string to_text(const ComputeResult& result) {
  std::string text = result.poly.to_text();
  if (result.cutoff) text += " + O(q^" + std::to_string(*result.cutoff + 1) + ")";
  return text;
}

bool SuiteReport::all_passed() const {
  return std::all_of(points.begin(), points.end(), [](const PointResult& p) { return p.passed; });
}

int SuiteReport::exit_code() const {
  if (!all_passed()) return 1;
  const bool divisibility = std::any_of(points.begin(), points.end(),
                                        [](const PointResult& p) { return p.divisibility_failed; });
  return divisibility ? 3 : 0;
}

json to_json(const SuiteReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    json entry{{"point", p.label}, {"passed", p.passed}};
    if (!p.detail.empty()) entry["detail"] = p.detail;
    if (!p.data.empty()) entry["data"] = p.data;
    points.push_back(std::move(entry));
  }
  return json{{"suite", report.suite},
              {"points", points},
              {"passed", report.all_passed()},
              {"exit_code", report.exit_code()}};
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& p : report.points) {
    out << (p.passed ? "PASS " : "FAIL ") << report.suite << ' ' << p.label;
    if (!p.detail.empty()) out << ": " << p.detail;
    out << '\n';
    if (!p.passed) ++failures;
  }
  out << report.suite << ": " << report.points.size() - failures << '/' << report.points.size() << " passed\n";
  return out.str();
}

}  // namespace agpoly
