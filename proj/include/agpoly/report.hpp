#pragma once

// Machine (JSON) and text renderings of results and verification reports.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agpoly/laurent_poly.hpp"
#include "agpoly/params.hpp"
#include "agpoly/rational_fn.hpp"

namespace agpoly {

/// [[i, j, "coefficient"], ...] in (i, j) order.
nlohmann::json poly_to_json(const LaurentPoly& poly);
LaurentPoly poly_from_json(const nlohmann::json& terms);

nlohmann::json params_to_json(const Params& p);
Params params_from_json(const nlohmann::json& j);

/// {unit: [sign, i, j], numerator: terms, denominator: [[a, b], ...]}
nlohmann::json rational_to_json(const RationalFn& x);

/// Result of a single compute command.
struct ComputeResult {
  Params params;
  std::string method;
  std::optional<int> cutoff;
  LaurentPoly poly;
  nlohmann::json meta = nlohmann::json::object();
};

nlohmann::json to_json(const ComputeResult& result);
ComputeResult compute_result_from_json(const nlohmann::json& j);

/// Text line: the polynomial, with "+ O(q^{cutoff+1})" for truncated series.
std::string to_text(const ComputeResult& result);

struct PointResult {
  std::string label;
  bool passed = true;
  /// First mismatch or other human-readable note.
  std::string detail;
  /// Set when the point is reported data rather than a pass/fail check
  /// that failed (the conjecture divisibility outcome).
  bool divisibility_failed = false;
  nlohmann::json data = nlohmann::json::object();
};

struct SuiteReport {
  std::string suite;
  std::vector<PointResult> points;

  bool all_passed() const;
  /// 0 all pass, 1 mismatch, 3 conjecture divisibility failure only.
  int exit_code() const;
};

nlohmann::json to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

}  // namespace agpoly
