#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "agpoly/report.hpp"

namespace agpoly::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2, kNotDivisible = 3 };

/// compute: evaluates d_N(k,l,r) by one method.
ComputeResult compute(const Params& params, const std::string& method, std::optional<int> cutoff);

/// Entry point shared by the binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agpoly::cli
