#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "photonsub/comb.hpp"
#include "photonsub/modes.hpp"
#include "photonsub/schmidt.hpp"
#include "photonsub/squeezed_state.hpp"
#include "photonsub/wigner.hpp"

using namespace photonsub;

TEST_CASE("phase-space grids sample the origin exactly") {
  const PhaseSpaceGrid grid = make_phase_grid(5.0, 101);
  CHECK(grid.axis[50] == 0.0);
  CHECK(grid.axis[0] == -5.0);
  CHECK(grid.axis[100] == 5.0);
  CHECK_THROWS_AS(make_phase_grid(3.0, 101), std::invalid_argument);
  CHECK_THROWS_AS(make_phase_grid(5.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(make_phase_grid(5.0, 99), std::invalid_argument);

  const PhaseSpaceGrid stretched = adequate_phase_grid({0.5, 0.0});
  CHECK(stretched.half_extent >= 5.0 * std::exp(0.5) - 1e-12);
  CHECK(stretched.size() % 2 == 1);
}

TEST_CASE("origin values of the squeezed and subtracted Wigner functions") {
  const PhaseSpaceGrid grid = make_phase_grid(5.0, 101);
  const WignerField vacuum_like = marginal_wigner(0.0, {0.0, 0.0}, grid);
  CHECK(std::abs(vacuum_like.values(50, 50) - 2.0 / M_PI) < 1e-12);
  const WignerField subtracted = marginal_wigner(1.0, {0.0, 0.0}, grid);
  CHECK(std::abs(subtracted.values(50, 50) + 2.0 / M_PI) < 1e-12);
}

TEST_CASE("Wigner fields integrate to one, squeezed or not") {
  const PhaseSpaceGrid grid = make_phase_grid(6.0, 201);
  for (double p : {0.0, 0.5, 1.0}) {
    CHECK(std::abs(integrate(marginal_wigner(p, {0.0, 0.0}, grid)) - 1.0) < 1e-6);
    const std::complex<double> xi = std::polar(0.3, 0.7);
    CHECK(std::abs(integrate(marginal_wigner(p, xi, adequate_phase_grid(xi))) - 1.0) < 1e-6);
  }
}

TEST_CASE("origin negativity appears strictly above p = 1/2") {
  const PhaseSpaceGrid grid = make_phase_grid(5.0, 101);
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const double origin = marginal_wigner(p, {0.0, 0.0}, grid).values(50, 50);
    CHECK(negative_at_origin(p) == (p > 0.5));
    CHECK((origin < 0.0) == (p > 0.5));
  }
}

TEST_CASE("squeezing acts as a symplectic coordinate change") {
  const PhaseSpaceGrid grid = make_phase_grid(6.0, 121);
  const std::complex<double> xi = std::polar(0.4, 1.1);
  const WignerField squeezed = marginal_wigner(0.7, xi, grid);
  const std::complex<double> alpha(grid.axis[40], grid.axis[77]);
  const std::complex<double> tilde = squeezed_coordinate(alpha, xi);
  const double a2 = std::norm(tilde);
  const double expected =
      (2.0 / M_PI) * std::exp(-2.0 * a2) * (0.3 + 0.7 * (4.0 * a2 - 1.0));
  CHECK(squeezed.values(40, 77) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(squeezed_coordinate(alpha, {0.0, 0.0}) == alpha);

  const WignerField fock = fock_mixture_wigner(0.7, grid);
  const WignerField plain = marginal_wigner(0.7, {0.0, 0.0}, grid);
  CHECK((fock.values - plain.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("per-pulse photon number integrates the theta density") {
  const double flat = per_pulse_photon_number([](double) { return 0.37; });
  CHECK(flat == doctest::Approx(0.37).epsilon(1e-14));
  const double lorentz = per_pulse_photon_number(lorentzian_theta_density(2.5, 0.7));
  CHECK(std::abs(lorentz - oracle::kLorentzAverage) < 1e-12);
  CHECK_THROWS_AS(per_pulse_photon_number([](double) { return 1.0; }, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(lorentzian_theta_density(-1.0, 0.5), std::invalid_argument);
}

TEST_CASE("comb report reduces to the single-pulse report for flat densities") {
  const FrequencyGrid grid = make_grid(12.0, 384);
  const SchmidtDecomposition d = analytic_bs_decomposition(1.0, 1.0, 0.1, grid);
  const MultimodeSqueezedState state = equal_hg_ensemble(6, 0.2, 1.0, grid);
  const Eigen::MatrixXcd c = mode_overlaps(d, state);

  const SubtractionReport single = subtraction_report(d, state, PhotonNumberConvention::weak);
  // A very broad Lorentzian is flat over the comb phases.
  const double per_pulse = per_pulse_photon_number(lorentzian_theta_density(0.2, 1e9));
  const SubtractionReport comb =
      comb_report(d.efficiencies, c, Eigen::ArrayXd::Constant(6, per_pulse));

  CHECK(comb.purity == doctest::Approx(single.purity).epsilon(1e-9));
  CHECK(comb.probability == doctest::Approx(single.probability).epsilon(1e-7));
  CHECK(comb.p_s[0] == doctest::Approx(single.p_s[0]).epsilon(1e-9));
}

TEST_CASE("heralded temporal mode: norm, symmetry, and envelope decay") {
  CombSpec comb;
  comb.cavity_decay = 0.5;
  const Eigen::ArrayXd coeffs = Eigen::ArrayXd::Ones(1);
  const TimeProfile profile = heralded_temporal_mode(comb, coeffs, 0.0);

  const double dt = profile.times[1] - profile.times[0];
  CHECK(std::abs(profile.values.square().sum() * dt - 1.0) < 1e-12);

  // Click at t = 0 on a symmetric train: profile is even in t.
  const long n = profile.times.size();
  CHECK(profile.times[0] == doctest::Approx(-profile.times[n - 1]));
  for (long i = 0; i < n; ++i)
    CHECK(std::abs(profile.values[i] - profile.values[n - 1 - i]) < 1e-12);

  // Pulse centers are exact samples; neighbors carry e^{-γ_c T0} of the weight.
  const auto at_time = [&](double t) {
    long idx = std::lround((t - profile.times[0]) / dt);
    return profile.values[idx];
  };
  const double ratio = at_time(comb.pulse_period) / at_time(0.0);
  CHECK(std::abs(ratio - oracle::kExpMinusHalf) < 1e-12);

  // Shifting the click by an integer number of periods translates the profile.
  const TimeProfile shifted = heralded_temporal_mode(comb, coeffs, 2.0 * comb.pulse_period);
  const double peak_shifted = shifted.values.abs().maxCoeff();
  long peak_index = 0;
  shifted.values.abs().maxCoeff(&peak_index);
  CHECK(shifted.times[peak_index] == doctest::Approx(2.0 * comb.pulse_period));
  CHECK(peak_shifted == doctest::Approx(at_time(0.0)).epsilon(1e-12));
}

TEST_CASE("comb input validation") {
  CombSpec comb;
  const Eigen::ArrayXd coeffs = Eigen::ArrayXd::Ones(1);
  comb.samples_per_period = 7;
  CHECK_THROWS_AS(heralded_temporal_mode(comb, coeffs, 0.0), std::invalid_argument);
  comb.samples_per_period = 64;
  comb.envelope_cutoff = 2.0;
  CHECK_THROWS_AS(heralded_temporal_mode(comb, coeffs, 0.0), std::invalid_argument);
  comb.envelope_cutoff = 1e-8;
  CHECK_THROWS_AS(heralded_temporal_mode(comb, Eigen::ArrayXd(), 0.0), std::invalid_argument);
}
