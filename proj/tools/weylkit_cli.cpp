// weylkit: command-line front end for the Weyl-function / response-vector
// toolkit. Every subcommand writes CSV to stdout or --out.

#include <fstream>
#include <iostream>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylkit/core.hpp"
#include "weylkit/dynamics.hpp"
#include "weylkit/inverse.hpp"
#include "weylkit/io.hpp"
#include "weylkit/self_check.hpp"
#include "weylkit/series.hpp"
#include "weylkit/spectral.hpp"

namespace {

using namespace weylkit;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> coeffs_paths;
  std::optional<int> N;
  std::optional<int> T;
  std::vector<std::string> lambdas;
  std::string method = "resolvent";
  double tol = 1e-12;
  std::optional<double> rho;
  std::optional<int> K;
  std::string samples_path;
  std::string out_path;
};

/// Which subcommand reaches each library operation.
const std::vector<std::pair<std::string, std::string>>& operation_coverage() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"lambda_to_z", "region"},
      {"z_to_lambda", "region"},
      {"entry_bound", "region"},
      {"in_convergence_region", "region"},
      {"region_boundary_curve", "region"},
      {"simulate_semi_infinite", "simulate"},
      {"simulate_finite", "simulate"},
      {"response_vector", "response"},
      {"response_vector_finite", "response"},
      {"convolve", "verify"},
      {"apply_response", "verify"},
      {"duhamel_solution", "verify"},
      {"goursat_kernel", "verify"},
      {"verify_goursat", "verify"},
      {"amplitude_bound_report", "verify"},
      {"polynomial_pair", "verify"},
      {"weyl_finite_poly", "weyl"},
      {"weyl_finite_resolvent", "weyl"},
      {"weyl_finite_backward", "weyl"},
      {"chebyshev_U", "verify"},
      {"free_polynomials", "verify"},
      {"free_weyl_finite", "verify"},
      {"s_kernel", "verify"},
      {"free_spectral_density", "verify"},
      {"weyl_series", "compare"},
      {"weyl_semi_infinite", "weyl"},
      {"hat_transform", "verify"},
      {"verify_hat_equation", "verify"},
      {"convergence_table", "verify"},
      {"response_from_weyl", "extract"},
      {"roundtrip_report", "verify"},
  };
  return table;
}

CheckResult coverage_audit() {
  static const std::vector<std::string> subcommands = {
      "simulate", "response", "weyl", "compare", "extract", "region", "verify"};
  std::map<std::string, int> seen;
  std::map<std::string, int> per_command;
  for (const auto& [op, cmd] : operation_coverage()) {
    ++seen[op];
    ++per_command[cmd];
  }
  std::string problems;
  for (const auto& [op, count] : seen) {
    if (count != 1) problems += " " + op + " mapped " + std::to_string(count) + "x;";
  }
  for (const auto& cmd : subcommands) {
    if (per_command[cmd] == 0) problems += " " + cmd + " reaches nothing;";
  }
  if (per_command.size() != subcommands.size()) problems += " unknown subcommand in table;";
  return {"cli.coverage_audit", problems.empty(),
          problems.empty() ? std::to_string(seen.size()) + " operations, one subcommand each"
                           : problems};
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

JacobiCoefficients load_single(const RunConfig& cfg) {
  if (cfg.coeffs_paths.empty()) throw UsageError("--coeffs is required");
  if (cfg.coeffs_paths.size() > 1) throw UsageError("--coeffs given more than once");
  return io::load_coefficients(cfg.coeffs_paths.front());
}

std::optional<int> matrix_size(const RunConfig& cfg, const JacobiCoefficients& coeffs) {
  return cfg.N ? cfg.N : coeffs.size();
}

int require_T(const RunConfig& cfg) {
  if (!cfg.T) throw UsageError("--T is required");
  return *cfg.T;
}

std::vector<Complex> parse_lambdas(const RunConfig& cfg) {
  std::vector<Complex> out;
  for (const auto& s : cfg.lambdas) out.push_back(io::parse_complex(s));
  return out;
}

int run_simulate(const RunConfig& cfg, std::ostream& os) {
  const auto coeffs = load_single(cfg);
  const int T = require_T(cfg);
  const auto N = matrix_size(cfg, coeffs);
  const WaveField u = N ? simulate_finite(coeffs, *N, ControlSequence::delta(), T)
                        : simulate_semi_infinite(coeffs, ControlSequence::delta(), T);
  io::write_wave_field(os, u);
  return 0;
}

int run_response(const RunConfig& cfg, std::ostream& os) {
  const auto coeffs = load_single(cfg);
  const int T = require_T(cfg);
  const auto N = matrix_size(cfg, coeffs);
  io::write_response(os, N ? response_vector_finite(coeffs, *N, T) : response_vector(coeffs, T));
  return 0;
}

int run_weyl(const RunConfig& cfg, std::ostream& os) {
  const auto coeffs = load_single(cfg);
  const WeylMethod method = parse_weyl_method(cfg.method);
  const auto lambdas = parse_lambdas(cfg);
  if (lambdas.empty()) throw UsageError("--lambda is required");
  const auto N = matrix_size(cfg, coeffs);
  if (method != WeylMethod::series && !N) {
    throw UsageError("--N is required for method " + cfg.method);
  }
  std::vector<io::WeylRow> rows;
  for (const Complex lambda : lambdas) {
    if (method == WeylMethod::series) {
      const RegionSpec region = entry_bound(coeffs);
      if (!in_convergence_region(lambda, region)) {
        throw DomainError("lambda = (" + io::format_number(lambda.real()) + ", " +
                          io::format_number(lambda.imag()) +
                          ") is outside the series convergence region |z| < 1/R");
      }
      const SeriesEvaluation s = N ? weyl_finite_series(coeffs, *N, lambda, cfg.tol)
                                   : weyl_semi_infinite(coeffs, lambda, cfg.tol);
      rows.push_back({lambda, {s.value, WeylMethod::series, s.tail_bound}});
    } else {
      rows.push_back({lambda, weyl_finite(coeffs, *N, lambda, method)});
    }
  }
  io::write_weyl(os, rows);
  return 0;
}

int run_compare(const RunConfig& cfg, std::ostream& os) {
  const auto coeffs = load_single(cfg);
  const auto N = matrix_size(cfg, coeffs);
  if (!N) throw UsageError("--N is required for compare");
  const int T = cfg.T.value_or(120);
  const RegionSpec region = entry_bound(coeffs);
  std::vector<Complex> lambdas = parse_lambdas(cfg);
  if (lambdas.empty()) {
    // default grid: 16 points on the circle R|z| = 0.3
    for (double phi : region_boundary_angles(16)) {
      lambdas.push_back(z_to_lambda(std::polar(0.3 / region.R, phi)));
    }
  }
  const ResponseVector r = response_vector_finite(coeffs, *N, T);
  std::vector<io::CompareRow> rows;
  for (const Complex lambda : lambdas) {
    const SeriesEvaluation s = weyl_series(r, lambda_to_z(lambda), region);
    rows.push_back({lambda, weyl_finite_resolvent(coeffs, *N, lambda).value, s.value,
                    s.tail_bound});
  }
  io::write_compare(os, rows);
  return 0;
}

int run_extract(const RunConfig& cfg, std::ostream& os) {
  const int T = require_T(cfg);
  const int K = cfg.K.value_or(default_contour_nodes(T));
  if (!cfg.samples_path.empty()) {
    if (!cfg.rho) throw UsageError("--rho is required with --samples");
    std::ifstream in(cfg.samples_path);
    if (!in) throw std::runtime_error("cannot open sample file '" + cfg.samples_path + "'");
    std::optional<RegionSpec> region;
    if (!cfg.coeffs_paths.empty()) region = entry_bound(load_single(cfg));
    io::write_extracted(os, response_from_samples(io::read_contour_samples(in), T, *cfg.rho,
                                                  K, region));
    return 0;
  }
  const auto coeffs = load_single(cfg);
  const auto N = matrix_size(cfg, coeffs);
  if (!N) throw UsageError("--N (or --samples) is required for extract");
  const WeylOracle oracle = resolvent_oracle(coeffs, *N);
  const double rho = cfg.rho.value_or(default_contour_radius(oracle.region));
  io::write_extracted(os, response_from_weyl(oracle, T, rho, K));
  return 0;
}

int run_region(const RunConfig& cfg, std::ostream& os) {
  const RegionSpec region = entry_bound(load_single(cfg));
  const auto lambdas = parse_lambdas(cfg);
  if (!lambdas.empty()) {
    os << "lambda_re,lambda_im,z_re,z_im,abs_z,z_radius,inside\n";
    for (const Complex lambda : lambdas) {
      const SpectralPoint p = lambda_to_z(lambda, BranchMode::relaxed);
      os << io::format_number(lambda.real()) << ',' << io::format_number(lambda.imag()) << ','
         << io::format_number(p.z.real()) << ',' << io::format_number(p.z.imag()) << ','
         << io::format_number(std::abs(p.z)) << ',' << io::format_number(region.z_radius())
         << ',' << (in_convergence_region(lambda, region) ? 1 : 0) << '\n';
    }
    return 0;
  }
  const int samples = cfg.K.value_or(64);
  const auto phis = region_boundary_angles(samples);
  const auto curve = region_boundary_curve(region, samples);
  os << "phi,lambda_re,lambda_im\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    os << io::format_number(phis[i]) << ',' << io::format_number(curve[i].real()) << ','
       << io::format_number(curve[i].imag()) << '\n';
  }
  return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
  std::vector<JacobiCoefficients> fixtures;
  for (const auto& path : cfg.coeffs_paths) fixtures.push_back(io::load_coefficients(path));
  auto results = run_self_check(fixtures);
  results.push_back(coverage_audit());
  int failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(results.size()) +
                           " checks failed")
     << '\n';
  return failed == 0 ? 0 : 1;
}

int dispatch(const RunConfig& cfg, std::ostream& os) {
  if (cfg.subcommand == "simulate") return run_simulate(cfg, os);
  if (cfg.subcommand == "response") return run_response(cfg, os);
  if (cfg.subcommand == "weyl") return run_weyl(cfg, os);
  if (cfg.subcommand == "compare") return run_compare(cfg, os);
  if (cfg.subcommand == "extract") return run_extract(cfg, os);
  if (cfg.subcommand == "region") return run_region(cfg, os);
  return run_verify(cfg, os);
}

void validate(const RunConfig& cfg) {
  if (cfg.N && *cfg.N < 1) throw UsageError("--N must be >= 1");
  if (cfg.T && *cfg.T < 1) throw UsageError("--T must be >= 1");
  if (cfg.K && *cfg.K < 1) throw UsageError("--K must be >= 1");
  if (cfg.rho && !(*cfg.rho > 0.0)) throw UsageError("--rho must be positive");
  if (!(cfg.tol >= 0.0)) throw UsageError("--tol must be nonnegative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl functions of Jacobi matrices from response vectors"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct SubcommandInfo {
    const char* name;
    const char* help;
  };
  const SubcommandInfo subcommands[] = {
      {"simulate", "Simulate the δ-driven wave system and emit n,t,value"},
      {"response", "Emit the response vector t,r"},
      {"weyl", "Evaluate the Weyl function at one or more lambda"},
      {"compare", "Compare the resolvent with the response-vector series"},
      {"extract", "Recover the response vector from Weyl-function samples"},
      {"region", "Convergence region: boundary curve or membership of lambda"},
      {"verify", "Run the invariant suite"},
  };
  for (const auto& info : subcommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("--coeffs", cfg.coeffs_paths, "Coefficient JSON file");
    sub->add_option("--N", cfg.N, "Finite matrix size");
    sub->add_option("--T", cfg.T, "Time horizon / number of response entries");
    sub->add_option("--lambda", cfg.lambdas, "Spectral parameter as \"re,im\" (repeatable)");
    sub->add_option("--method", cfg.method, "resolvent | poly_ratio | backward | series");
    sub->add_option("--tol", cfg.tol, "Series tolerance");
    sub->add_option("--rho", cfg.rho, "Contour radius in z");
    sub->add_option("--K", cfg.K, "Contour nodes / curve samples");
    sub->add_option("--samples", cfg.samples_path, "Contour samples CSV (extract)");
    sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "weylkit: " << e.what() << '\n';
    return 2;
  }

  try {
    validate(cfg);
    if (cfg.out_path.empty()) return dispatch(cfg, std::cout);
    std::ofstream out(cfg.out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
    return dispatch(cfg, out);
  } catch (const std::exception& e) {
    std::cerr << "weylkit " << cfg.subcommand << ": " << e.what() << '\n';
    return 2;
  }
}
