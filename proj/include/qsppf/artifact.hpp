#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsppf/analysis.hpp"
#include "qsppf/jacobi_anger.hpp"
#include "qsppf/solver.hpp"
#include "qsppf/types.hpp"

namespace qsppf {

enum class TargetKind { Coefficients, JacobiAngerEven, JacobiAngerOdd, AbsXCubed };

inline const char* to_string(TargetKind k) {
  switch (k) {
    case TargetKind::Coefficients: return "coefficients";
    case TargetKind::JacobiAngerEven: return "jacobi-anger-even";
    case TargetKind::JacobiAngerOdd: return "jacobi-anger-odd";
    case TargetKind::AbsXCubed: return "abs-x-cubed";
  }
  return "?";
}

// One solve input: either literal coefficients or a named target family.
struct TargetSpec {
  TargetKind kind = TargetKind::Coefficients;
  Parity parity = Parity::Even;       // coefficients
  std::vector<double> coeffs;         // coefficients
  double tau = 0.0;                   // jacobi-anger
  double eps0 = 1e-14;                // jacobi-anger
  double scale = 0.5;                 // jacobi-anger / abs-x-cubed
  int degree = 1000;                  // abs-x-cubed truncation index
};

struct RunArtifact {
  TargetSpec target;
  double tol = 1e-12;
  int max_iter = 100;
  Parity parity = Parity::Even;
  std::vector<double> coefficients;
  std::vector<double> phase_factors;
  std::vector<double> residual_history;
  int iterations = 0;
  bool converged = false;
  bool certified = false;
  double c_one_norm = 0.0;
  double phi_one_norm = 0.0;
  std::optional<double> apriori_bound;
  double timing_seconds = 0.0;
};

namespace detail {

// 17 significant digits: enough for a lossless double round trip, and a
// fixed format keeps artifacts byte-stable across runs.
inline std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void append_real_array(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt_real(v[i]);
  }
  out += ']';
}

inline Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be \"even\" or \"odd\"");
}

}  // namespace detail

inline TargetSpec parse_target_spec(const nlohmann::json& j) {
  TargetSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "coefficients") {
    spec.kind = TargetKind::Coefficients;
    spec.parity = detail::parity_from_string(j.at("parity").get<std::string>());
    spec.coeffs = j.at("coeffs").get<std::vector<double>>();
  } else if (kind == "jacobi-anger-even" || kind == "jacobi-anger-odd") {
    spec.kind = kind == "jacobi-anger-even" ? TargetKind::JacobiAngerEven : TargetKind::JacobiAngerOdd;
    spec.tau = j.at("tau").get<double>();
    spec.eps0 = j.value("eps0", 1e-14);
    spec.scale = j.value("scale", 0.5);
  } else if (kind == "abs-x-cubed") {
    spec.kind = TargetKind::AbsXCubed;
    spec.scale = j.value("scale", 0.8);
    spec.degree = j.value("degree", 1000);
  } else {
    throw std::invalid_argument("unknown target kind: " + kind);
  }
  return spec;
}

inline TargetSpec parse_target_spec(const std::string& text) {
  return parse_target_spec(nlohmann::json::parse(text));
}

// Materialize the Chebyshev-coefficient target a spec describes.
inline ChebyshevCoefficients resolve_target(const TargetSpec& spec) {
  switch (spec.kind) {
    case TargetKind::Coefficients:
      return ChebyshevCoefficients(spec.coeffs, spec.parity);
    case TargetKind::JacobiAngerEven:
      return jacobi_anger(spec.tau, spec.eps0, spec.scale).even;
    case TargetKind::JacobiAngerOdd:
      return jacobi_anger(spec.tau, spec.eps0, spec.scale).odd;
    case TargetKind::AbsXCubed:
      return abs_x_cubed_coefficients(spec.scale, spec.degree);
  }
  throw std::logic_error("resolve_target: bad kind");
}

inline std::string target_spec_to_json(const TargetSpec& spec) {
  std::string out = "{\"kind\":\"";
  out += to_string(spec.kind);
  out += '"';
  switch (spec.kind) {
    case TargetKind::Coefficients:
      out += ",\"parity\":\"";
      out += to_string(spec.parity);
      out += "\",\"coeffs\":";
      detail::append_real_array(out, spec.coeffs);
      break;
    case TargetKind::JacobiAngerEven:
    case TargetKind::JacobiAngerOdd:
      out += ",\"tau\":" + detail::fmt_real(spec.tau);
      out += ",\"eps0\":" + detail::fmt_real(spec.eps0);
      out += ",\"scale\":" + detail::fmt_real(spec.scale);
      break;
    case TargetKind::AbsXCubed:
      out += ",\"scale\":" + detail::fmt_real(spec.scale);
      out += ",\"degree\":" + std::to_string(spec.degree);
      break;
  }
  out += '}';
  return out;
}

inline std::string to_json(const RunArtifact& a) {
  std::string out = "{\n";
  out += "\"target\":" + target_spec_to_json(a.target) + ",\n";
  out += "\"solver_config\":{\"tol\":" + detail::fmt_real(a.tol) +
         ",\"max_iter\":" + std::to_string(a.max_iter) + "},\n";
  out += "\"parity\":\"";
  out += to_string(a.parity);
  out += "\",\n\"coefficients\":";
  detail::append_real_array(out, a.coefficients);
  out += ",\n\"phase_factors\":";
  detail::append_real_array(out, a.phase_factors);
  out += ",\n\"residual_history\":";
  detail::append_real_array(out, a.residual_history);
  out += ",\n\"iterations\":" + std::to_string(a.iterations);
  out += ",\n\"converged\":" + std::string(a.converged ? "true" : "false");
  out += ",\n\"guarantee\":\"" + std::string(a.certified ? "certified" : "uncertified") + "\"";
  out += ",\n\"norms\":{\"c_one_norm\":" + detail::fmt_real(a.c_one_norm) +
         ",\"phi_one_norm\":" + detail::fmt_real(a.phi_one_norm) + ",\"apriori_bound\":" +
         (a.apriori_bound ? detail::fmt_real(*a.apriori_bound) : std::string("null")) + "},\n";
  out += "\"timing_seconds\":" + detail::fmt_real(a.timing_seconds) + "\n}\n";
  return out;
}

inline RunArtifact artifact_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RunArtifact a;
  a.target = parse_target_spec(j.at("target"));
  a.tol = j.at("solver_config").at("tol").get<double>();
  a.max_iter = j.at("solver_config").at("max_iter").get<int>();
  a.parity = detail::parity_from_string(j.at("parity").get<std::string>());
  a.coefficients = j.at("coefficients").get<std::vector<double>>();
  a.phase_factors = j.at("phase_factors").get<std::vector<double>>();
  a.residual_history = j.at("residual_history").get<std::vector<double>>();
  a.iterations = j.at("iterations").get<int>();
  a.converged = j.at("converged").get<bool>();
  a.certified = j.at("guarantee").get<std::string>() == "certified";
  a.c_one_norm = j.at("norms").at("c_one_norm").get<double>();
  a.phi_one_norm = j.at("norms").at("phi_one_norm").get<double>();
  if (!j.at("norms").at("apriori_bound").is_null())
    a.apriori_bound = j.at("norms").at("apriori_bound").get<double>();
  a.timing_seconds = j.at("timing_seconds").get<double>();
  return a;
}

inline RunArtifact artifact_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open artifact: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return artifact_from_json(buf.str());
}

// Decay CSV: one row per tail index, LF line endings, a mandatory header and
// a trailing comment row echoing the fitted rates. bound_rhs stays empty when
// ||c||_1 is outside the region where the decay constant exists.
inline std::string decay_csv(const DecayProfile& profile) {
  std::string out = "n,tail_c,tail_phi,bound_rhs\n";
  for (std::size_t n = 0; n < profile.tail_sums_c.size(); ++n) {
    out += std::to_string(n);
    out += ',' + detail::fmt_real(profile.tail_sums_c[n]);
    out += ',' + detail::fmt_real(profile.tail_sums_phi[n]);
    out += ',';
    if (profile.decay_constant)
      out += detail::fmt_real(*profile.decay_constant * profile.tail_sums_c[n]);
    out += '\n';
  }
  out += "# fitted_rate_c=" + detail::fmt_real(profile.fitted_rate_c) +
         ",fitted_rate_phi=" + detail::fmt_real(profile.fitted_rate_phi) + "\n";
  return out;
}

}  // namespace qsppf
