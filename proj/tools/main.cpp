// qsppf: compute, verify, and profile symmetric QSP phase factors for
// Chebyshev-coefficient targets. Exit codes: 0 success, 1 input error,
// 2 non-convergence.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qsppf/artifact.hpp"
#include "qsppf/qsppf.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int run_solve(const std::string& input, double tol, int max_iter, const std::string& output) {
  qsppf::RunArtifact artifact;
  artifact.target = qsppf::parse_target_spec(read_file(input));
  artifact.tol = tol;
  artifact.max_iter = max_iter;

  const qsppf::ChebyshevCoefficients c = qsppf::resolve_target(artifact.target);
  qsppf::SolverConfig config;
  config.tol = tol;
  config.max_iter = max_iter;

  const auto start = std::chrono::steady_clock::now();
  qsppf::SolverReport report;
  try {
    report = qsppf::fpi_solve(c, config);
  } catch (const qsppf::SolveDivergedError& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return 2;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  artifact.parity = c.parity;
  artifact.coefficients = c.coeffs;
  artifact.phase_factors = report.phi.values;
  artifact.residual_history = report.residual_history;
  artifact.iterations = report.iterations;
  artifact.converged = report.converged;
  artifact.certified = report.guarantee == qsppf::Guarantee::Certified;
  artifact.c_one_norm = c.one_norm();
  artifact.phi_one_norm = report.phi.one_norm();
  artifact.apriori_bound = report.apriori_phi_bound;
  artifact.timing_seconds = elapsed.count();
  write_file(output, qsppf::to_json(artifact));

  std::cout << (report.converged ? "converged" : "not converged") << " after "
            << report.iterations << " iterations, residual "
            << report.residual_history.back() << ", wrote " << output << "\n";
  return report.converged ? 0 : 2;
}

int run_decay(const std::string& input, const std::string& output) {
  const qsppf::RunArtifact artifact = qsppf::artifact_from_file(input);
  const qsppf::ChebyshevCoefficients c(artifact.coefficients, artifact.parity);
  const qsppf::ReducedPhaseFactors phi(artifact.phase_factors, artifact.parity);
  write_file(output, qsppf::decay_csv(qsppf::decay_profile(c, phi)));
  return 0;
}

int run_verify(const std::string& input) {
  const qsppf::RunArtifact artifact = qsppf::artifact_from_file(input);
  const qsppf::ChebyshevCoefficients c(artifact.coefficients, artifact.parity);
  const qsppf::ReducedPhaseFactors phi(artifact.phase_factors, artifact.parity);
  const qsppf::ChebyshevCoefficients f = qsppf::forward_map(phi);
  double residual = 0.0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    residual += std::abs(f.coeffs[i] - c.coeffs[i]);
  std::cout << "{\"max_pointwise_error\":"
            << qsppf::detail::fmt_real(qsppf::max_pointwise_error(phi, c))
            << ",\"residual_l1\":" << qsppf::detail::fmt_real(residual) << "}\n";
  return 0;
}

int run_constants() {
  const auto k = qsppf::bounds::constants();
  std::cout << "{\"r_phi\":" << qsppf::detail::fmt_real(k.r_phi)
            << ",\"r_c\":" << qsppf::detail::fmt_real(k.r_c)
            << ",\"r_phi_tilde\":" << qsppf::detail::fmt_real(k.r_phi_tilde)
            << ",\"r_c_tilde\":" << qsppf::detail::fmt_real(k.r_c_tilde)
            << ",\"gamma_tilde\":" << qsppf::detail::fmt_real(k.gamma_tilde) << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric QSP phase-factor solver"};
  app.require_subcommand(1);

  std::string input, output;
  double tol = 1e-12;
  int max_iter = 100;

  auto* solve = app.add_subcommand("solve", "solve for phase factors of a target spec");
  solve->add_option("--input", input, "target spec (JSON)")->required();
  solve->add_option("--tol", tol, "l1 residual tolerance");
  solve->add_option("--max-iter", max_iter, "iteration cap");
  solve->add_option("--output", output, "artifact path (JSON)")->required();

  auto* decay = app.add_subcommand("decay", "tail-decay profile of a solved artifact");
  decay->add_option("--input", input, "run artifact (JSON)")->required();
  decay->add_option("--output", output, "CSV path")->required();

  auto* verify = app.add_subcommand("verify", "recompute the error measures of an artifact");
  verify->add_option("--input", input, "run artifact (JSON)")->required();

  auto* constants = app.add_subcommand("constants", "print the convergence-region constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (solve->parsed()) return run_solve(input, tol, max_iter, output);
    if (decay->parsed()) return run_decay(input, output);
    if (verify->parsed()) return run_verify(input);
    if (constants->parsed()) return run_constants();
  } catch (const std::exception& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return 1;
  }
  return 1;
}
