#include <catch2/catch.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "qsppf/chebyshev.hpp"
#include "support.hpp"

using namespace qsppf;

TEST_CASE("node grid starts exactly at 1") {
  const NodeGrid grid(7);
  REQUIRE(grid.nodes.size() == 15);
  REQUIRE(grid.nodes[0] == 1.0);
  for (double x : grid.nodes) REQUIRE(std::abs(x) <= 1.0);
}

TEST_CASE("coeffs_of_samples recovers simple polynomials") {
  {
    const NodeGrid grid(2);
    std::vector<double> samples(grid.nodes.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
      samples[j] = 2 * grid.nodes[j] * grid.nodes[j] - 1;  // T_2
    const auto c = coeffs_of_samples(samples, Parity::Even);
    REQUIRE(c.coeffs.size() == 2);
    REQUIRE(c.coeffs[0] == Approx(0.0).margin(1e-14));
    REQUIRE(c.coeffs[1] == Approx(1.0).margin(1e-14));
  }
  {
    const auto c = coeffs_of_samples(std::vector<double>{1.0}, Parity::Even);
    REQUIRE(c.coeffs.size() == 1);
    REQUIRE(c.coeffs[0] == Approx(1.0).margin(1e-15));
  }
  {
    // x^3 = (3 T_1 + T_3) / 4
    const NodeGrid grid(3);
    std::vector<double> samples(grid.nodes.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
      samples[j] = grid.nodes[j] * grid.nodes[j] * grid.nodes[j];
    const auto c = coeffs_of_samples(samples, Parity::Odd);
    REQUIRE(c.coeffs.size() == 2);
    REQUIRE(c.coeffs[0] == Approx(0.75).margin(1e-14));
    REQUIRE(c.coeffs[1] == Approx(0.25).margin(1e-14));
  }
}

TEST_CASE("coeffs_of_samples needs an odd sample count") {
  REQUIRE_THROWS_AS(coeffs_of_samples(std::vector<double>{1.0, 2.0}, Parity::Even),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(coeffs_of_samples(std::vector<double>{}, Parity::Even), std::invalid_argument);
}

TEST_CASE("sampling a synthesized parity series round-trips") {
  auto rng = testsupport::make_rng(31);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Parity parity = testsupport::random_parity(rng);
    std::vector<double> coeffs(1 + trial % 9);
    for (auto& v : coeffs) v = unif(rng);
    const ChebyshevCoefficients c(coeffs, parity);
    const NodeGrid grid(c.degree());
    std::vector<double> samples(grid.nodes.size());
    for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = evaluate(c, grid.nodes[j]);
    const auto back = coeffs_of_samples(samples, parity);
    REQUIRE(back.coeffs.size() == coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      REQUIRE(back.coeffs[j] == Approx(coeffs[j]).margin(1e-12));
  }
}

TEST_CASE("forward_map on known reduced sets") {
  {
    const auto c = forward_map(ReducedPhaseFactors::zeros(6, Parity::Even));
    for (double v : c.coeffs) REQUIRE(v == 0.0);  // g vanishes identically
  }
  {
    const auto c = forward_map({{0.37}, Parity::Even});
    REQUIRE(c.coeffs.size() == 1);
    REQUIRE(c.coeffs[0] == Approx(std::sin(0.74)).margin(1e-14));
  }
  {
    const auto c = forward_map({{0.3, 0.2}, Parity::Even});
    REQUIRE(c.coeffs.size() == 2);
    REQUIRE(c.coeffs[0] == Approx(std::sin(0.6) * std::cos(0.4)).margin(1e-13));
    REQUIRE(c.coeffs[1] == Approx(std::cos(0.6) * std::sin(0.4)).margin(1e-13));
  }
  REQUIRE(forward_map({{}, Parity::Even}).coeffs.empty());
}

TEST_CASE("forward_map is stable under zero padding") {
  auto rng = testsupport::make_rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    const auto phi = testsupport::random_phi(rng, 1 + trial % 6, testsupport::random_parity(rng), 1.1);
    const auto base = forward_map(phi);
    for (std::size_t pad : {1u, 3u}) {
      ReducedPhaseFactors padded = phi;
      padded.values.resize(padded.values.size() + pad, 0.0);
      const auto wide = forward_map(padded);
      REQUIRE(wide.coeffs.size() == base.coeffs.size() + pad);
      for (std::size_t j = 0; j < wide.coeffs.size(); ++j) {
        const double want = j < base.coeffs.size() ? base.coeffs[j] : 0.0;
        REQUIRE(std::abs(wide.coeffs[j] - want) <= 1e-10);
      }
    }
  }
}

TEST_CASE("forward_map matches the symbolic expansion for short sets") {
  auto rng = testsupport::make_rng(33);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto phi = testsupport::random_phi(rng, n, testsupport::random_parity(rng), 1.3);
      const auto got = forward_map(phi);
      const auto want = testsupport::oracle_forward_map(phi);
      REQUIRE(got.coeffs.size() == want.size());
      for (std::size_t j = 0; j < want.size(); ++j)
        REQUIRE(got.coeffs[j] == Approx(want[j]).margin(1e-11));
    }
  }
}

TEST_CASE("forward_map norm is bounded by sinh(2 ||Phi||_1)") {
  auto rng = testsupport::make_rng(34);
  std::uniform_real_distribution<double> norm_pick(0.0, 1.5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto phi =
        testsupport::random_phi(rng, 1 + trial % 10, testsupport::random_parity(rng), norm_pick(rng));
    REQUIRE(forward_map(phi).one_norm() <= std::sinh(2.0 * phi.one_norm()) + 1e-10);
  }
}

TEST_CASE("clenshaw evaluates Chebyshev series") {
  // T_0 + 2 T_1 - T_3 at a few points, against the trig form
  const std::vector<double> coeffs{1.0, 2.0, 0.0, -1.0};
  for (double x : {-1.0, -0.3, 0.2, 0.9}) {
    const double theta = std::acos(x);
    const double want = 1.0 + 2.0 * std::cos(theta) - std::cos(3 * theta);
    REQUIRE(clenshaw(coeffs, x) == Approx(want).margin(1e-13));
  }
  REQUIRE(clenshaw(std::vector<double>{}, 0.5) == 0.0);
}
