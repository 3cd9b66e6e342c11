#include <doctest.h>

#include <cmath>

#include "photonsub/kernels.hpp"
#include "photonsub/modes.hpp"
#include "photonsub/schmidt.hpp"

using namespace photonsub;

TEST_CASE("diagonal kernels cannot be decomposed on a grid") {
  const FrequencyGrid grid = make_grid(8.0, 128);
  const KernelOperator kernel = beamsplitter_kernel_slow(0.1, FilterModel::gaussian(1.0), grid);
  CHECK_THROWS_AS(decompose(kernel), std::invalid_argument);
}

TEST_CASE("analytic beamsplitter family: geometric efficiencies, exact sums") {
  const FrequencyGrid grid = make_grid(16.0, 512);
  const double omega_f = 1.0, tau_d = 2.0, r = 0.1;
  const SchmidtDecomposition d = analytic_bs_decomposition(omega_f, tau_d, r, grid);

  const double eps = tau_d * omega_f;
  const double u = std::sqrt(1.0 + eps * eps);
  const double q = eps * eps / ((1.0 + u) * (1.0 + u));
  REQUIRE(d.efficiencies.size() > 3);
  for (int j = 0; j + 1 < d.efficiencies.size(); ++j)
    CHECK(d.efficiencies[j + 1] / d.efficiencies[j] == doctest::Approx(q).epsilon(1e-12));

  // Total efficiency equals the kernel trace r²√π ω_f (Γ(0)=1 convention).
  const double tail = std::pow(q, d.efficiencies.size());
  CHECK(d.efficiencies.sum() / (1.0 - tail) ==
        doctest::Approx(r * r * std::sqrt(M_PI) * omega_f).epsilon(1e-10));
  CHECK(schmidt_number(d) == doctest::Approx(u).epsilon(1e-6));

  // Modes are orthonormal HGs of the jitter-widened timescale.
  const double tau_mode = std::sqrt(u) / omega_f;
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(amplitude_norm(d.modes[j]) - 1.0) < 1e-12);
    const std::complex<double> ov = inner_product(d.modes[j], hermite_gaussian(j, tau_mode, grid));
    CHECK(std::abs(ov - 1.0) < 1e-12);
  }

  // No jitter: a single subtraction mode.
  const SchmidtDecomposition pure = analytic_bs_decomposition(omega_f, 0.0, r, grid);
  CHECK(pure.efficiencies.size() == 1);
  CHECK(pure.efficiencies[0] == doctest::Approx(r * r * std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(schmidt_number(pure) == doctest::Approx(1.0));
}

TEST_CASE("numerical decomposition matches the analytic beamsplitter family") {
  const double omega_f = 1.0, r = 0.1;
  for (double eps : {0.3, 1.0, 4.0}) {
    const double tau_d = eps / omega_f;
    const double tau_mode = std::pow(1.0 + eps * eps, 0.25) / omega_f;
    const FrequencyGrid grid = make_grid(8.0, 384, std::max(1.0 / tau_mode, omega_f));
    const KernelOperator kernel =
        time_resolved_kernel(beamsplitter_coupling(r, grid), FilterModel::gaussian(omega_f),
                             DetectorModel::gaussian_jitter(tau_d), 0.0);
    const SchmidtDecomposition numeric = decompose(kernel, 1e-8);
    const SchmidtDecomposition analytic = analytic_bs_decomposition(omega_f, tau_d, r, grid);

    CHECK(schmidt_number(numeric) ==
          doctest::Approx(std::sqrt(1.0 + eps * eps)).epsilon(0.01));
    const int shared = std::min<int>(numeric.efficiencies.size(), analytic.efficiencies.size());
    for (int j = 0; j < std::min(shared, 4); ++j)
      CHECK(numeric.efficiencies[j] ==
            doctest::Approx(analytic.efficiencies[j]).epsilon(0.01));
    const std::complex<double> overlap = inner_product(numeric.modes[0], analytic.modes[0]);
    CHECK(std::norm(overlap) >= 0.999);

    // Eigenvalues descending, all positive, orthonormal modes, phase convention.
    for (int j = 0; j + 1 < numeric.efficiencies.size(); ++j)
      CHECK(numeric.efficiencies[j] >= numeric.efficiencies[j + 1]);
    CHECK(numeric.efficiencies.minCoeff() > 0.0);
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        const std::complex<double> ov = inner_product(numeric.modes[a], numeric.modes[b]);
        CHECK(std::abs(ov - (a == b ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("numerical decomposition matches the analytic up-conversion family") {
  const double tau_g = 1.0, omega_ph = 1.5811388300841898, omega_f = omega_ph;
  const double w = 1.0 / std::sqrt(1.0 / (omega_ph * omega_ph) + 1.0 / (omega_f * omega_f));
  const double big_k = std::sqrt(1.0 + tau_g * tau_g * w * w);
  const FrequencyGrid grid = make_grid(10.0, 384, std::max(1.0 / tau_g, w));

  const KernelOperator kernel =
      upconversion_kernel(gaussian_gate(tau_g, grid), gaussian_phasematch(omega_ph, grid),
                          {1.0, 0.0}, FilterModel::gaussian(omega_f), grid);
  const SchmidtDecomposition numeric = decompose(kernel, 1e-8);
  const SchmidtDecomposition analytic =
      analytic_upconversion_decomposition(tau_g, omega_ph, omega_f, {1.0, 0.0}, grid, 1e-8);

  CHECK(schmidt_number(numeric) == doctest::Approx(big_k).epsilon(0.01));
  const double q = (big_k - 1.0) / (big_k + 1.0);
  CHECK(numeric.efficiencies[1] / numeric.efficiencies[0] == doctest::Approx(q).epsilon(0.01));
  CHECK(std::norm(inner_product(numeric.modes[0], analytic.modes[0])) >= 0.999);
}

TEST_CASE("open-filter up-conversion reduces the filtered width to the phase-matching width") {
  const FrequencyGrid grid = make_grid(16.0, 256);
  const double inf = std::numeric_limits<double>::infinity();
  const SchmidtDecomposition open =
      analytic_upconversion_decomposition(1.0, 0.9, inf, {1.0, 0.0}, grid);
  const SchmidtDecomposition matched =
      analytic_upconversion_decomposition(1.0, 0.9, 1e12, {1.0, 0.0}, grid);
  CHECK(open.efficiencies[0] == doctest::Approx(matched.efficiencies[0]).epsilon(1e-9));
  CHECK(open.efficiencies.sum() ==
        doctest::Approx(std::sqrt(M_PI) * 0.9).epsilon(1e-10));
}

TEST_CASE("schmidt number input validation") {
  Eigen::ArrayXd zeros = Eigen::ArrayXd::Zero(3);
  CHECK_THROWS_AS(schmidt_number(zeros), std::invalid_argument);
  Eigen::ArrayXd single(1);
  single[0] = 0.5;
  CHECK(schmidt_number(single) == doctest::Approx(1.0));
}
