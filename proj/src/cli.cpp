#include "agpoly/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "agpoly/bosonic.hpp"
#include "agpoly/fermionic.hpp"
#include "agpoly/grid.hpp"
#include "agpoly/polyhedral.hpp"
#include "agpoly/quotient_oracle.hpp"
#include "agpoly/verify.hpp"

namespace agpoly::cli {

namespace {

const std::vector<std::string> kMethods{"fermionic", "enumerate", "transfer", "recursion", "bosonic", "oracle"};

Params parse_assignments(const std::vector<std::string>& assignments) {
  std::map<char, int> values;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq != 1 || std::string("Nklr").find(a[0]) == std::string::npos) {
      throw UsageError("expected N=<int>, k=<int>, l=<int> or r=<int>, got '" + a + "'");
    }
    int value = 0;
    const char* begin = a.data() + 2;
    const char* end = a.data() + a.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) throw UsageError("bad integer in '" + a + "'");
    values[a[0]] = value;
  }
  for (char c : std::string("Nklr")) {
    if (!values.count(c)) throw UsageError(std::string("missing parameter ") + c + "=<int>");
  }
  return Params{values['N'], values['k'], values['l'], values['r']};
}

}  // namespace

ComputeResult compute(const Params& params, const std::string& method, std::optional<int> cutoff) {
  ComputeResult result;
  result.params = params;
  result.method = method;
  if (method == "fermionic") {
    result.poly = fermionic::fermionic_sum(params);
  } else if (method == "enumerate") {
    result.poly = polyhedral::hilbert_by_enumeration(params);
  } else if (method == "transfer") {
    result.poly = polyhedral::hilbert_by_transfer(params);
  } else if (method == "recursion") {
    result.poly = polyhedral::recursion_rhs(params);
  } else if (method == "oracle") {
    require_basis_params(params);
    const int qbound = cutoff ? *cutoff : polyhedral::degree_bounds(params).maxdeg_q;
    result.poly = quotient::hilbert_by_quotient(params, qbound);
    result.meta["qbound"] = qbound;
  } else if (method == "bosonic") {
    require_vertex_params(params);
    if (!cutoff && (params.N < 2 || params.l < 0 || params.r < 0)) {
      throw UsageError("bosonic method needs --cutoff when N < 2 or l, r < 0");
    }
    const int d = cutoff ? *cutoff : polyhedral::default_cutoff(params);
    if (d < 0) throw UsageError("cutoff must be >= 0");
    const auto parities = bosonic::select_case(params);
    result.poly = bosonic::bosonic_sum(params, parities.front(), d).poly();
    result.cutoff = d;
    result.meta["parity"] = bosonic::to_string(parities.front());
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  result.meta["value_at_one"] = result.poly.evaluate_at_one().get_str();
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bigraded Hilbert polynomials d_N(k,l,r;q,z): fermionic, basis and vertex-cone forms", "agpoly"};
  app.require_subcommand(1);

  std::vector<std::string> assignments;
  std::string method = "transfer";
  std::optional<int> cutoff;
  std::string format = "text";

  auto* compute_cmd = app.add_subcommand("compute", "Compute d_N(k,l,r;q,z) by one method");
  compute_cmd->add_option("params", assignments, "N=<int> k=<int> l=<int> r=<int>")->required();
  compute_cmd->add_option("-m,--method", method)->check(CLI::IsMember(kMethods));
  compute_cmd->add_option("-c,--cutoff", cutoff, "q-degree cutoff for series methods");
  compute_cmd->add_option("-f,--format", format)->check(CLI::IsMember({"text", "machine"}));

  auto* basis_cmd = app.add_subcommand("basis", "List the monomial basis as exponent vectors");
  basis_cmd->add_option("params", assignments, "N=<int> k=<int> l=<int> r=<int>")->required();
  basis_cmd->add_option("-f,--format", format)->check(CLI::IsMember({"text", "machine"}));

  std::string suite_name;
  std::string grid_spec;
  std::string config_path;
  std::string output_path;
  bool no_oracle = false;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite over a parameter grid");
  verify_cmd->add_option("suite", suite_name)->required()->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("-g,--grid", grid_spec, "e.g. N=2..4,k=0..2,l=0..k,r=0..k");
  verify_cmd->add_option("--config", config_path, "JSON file with {\"grids\": {suite: grid}}");
  verify_cmd->add_option("-c,--cutoff", cutoff, "override the default series cutoff");
  verify_cmd->add_flag("--no-oracle", no_oracle, "skip the quotient oracle in crosscheck");
  verify_cmd->add_option("-j,--threads", threads, "worker threads (0 = all cores)");
  verify_cmd->add_option("-f,--format", format)->check(CLI::IsMember({"text", "machine"}));
  verify_cmd->add_option("-o,--output", output_path, "also write the machine report to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*compute_cmd) {
      const auto result = compute(parse_assignments(assignments), method, cutoff);
      if (format == "machine") {
        out << to_json(result).dump() << '\n';
      } else {
        out << to_text(result) << '\n';
      }
      return kSuccess;
    }

    if (*basis_cmd) {
      const Params p = parse_assignments(assignments);
      const auto basis = polyhedral::enumerate_basis(p);
      if (format == "machine") {
        nlohmann::json vectors = nlohmann::json::array();
        for (const auto& v : basis) vectors.push_back(v.a);
        out << nlohmann::json{{"params", params_to_json(p)}, {"basis", vectors}}.dump() << '\n';
      } else {
        for (const auto& v : basis) {
          for (std::size_t i = 0; i < v.a.size(); ++i) out << (i ? " " : "") << v.a[i];
          out << '\n';
        }
      }
      return kSuccess;
    }

    const auto suite = verify::parse_suite(suite_name);
    if (grid_spec.empty() && !config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config file " + config_path);
      const auto config = nlohmann::json::parse(in);
      if (config.contains("grids") && config["grids"].contains(suite_name)) {
        grid_spec = config["grids"][suite_name].get<std::string>();
      }
    }
    if (grid_spec.empty()) throw UsageError("verify needs --grid (or a config file entry for the suite)");
    verify::Options opts;
    opts.with_oracle = !no_oracle;
    opts.cutoff = cutoff;
    opts.threads = threads;
    const auto report = verify::run_suite(suite, resolve_grid(grid_spec), opts);
    if (format == "machine") {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << to_text(report);
    }
    if (!output_path.empty()) {
      std::ofstream file(output_path);
      file << to_json(report).dump(2) << '\n';
    }
    return report.exit_code();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace agpoly::cli
