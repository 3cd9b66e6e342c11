#include "photonsub/modes.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "photonsub/errors.hpp"

namespace photonsub {

Eigen::ArrayXd hermite_function(int k, const Eigen::ArrayXd& x) {
  if (k < 0) throw std::invalid_argument("hermite_function: order must be non-negative");
  if (k > 200) throw std::invalid_argument("hermite_function: order > 200 not supported");
  // Normalized recurrence ψ_{k+1} = √(2/(k+1)) x ψ_k − √(k/(k+1)) ψ_{k−1}; stable for
  // all supported orders, exactly parity-symmetric on sign-paired samples.
  Eigen::ArrayXd prev = std::pow(M_PI, -0.25) * (-0.5 * x.square()).exp();
  if (k == 0) return prev;
  Eigen::ArrayXd curr = std::sqrt(2.0) * x * prev;
  for (int j = 1; j < k; ++j) {
    Eigen::ArrayXd next =
        std::sqrt(2.0 / (j + 1)) * x * curr - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

double hg_extent_requirement(int k, double tau) {
  return (std::sqrt(2.0 * k + 1.0) + 4.0) / tau;
}

namespace {

void check_mode_fits(int k, double tau, const FrequencyGrid& grid, const char* who) {
  if (!(tau > 0.0)) throw std::invalid_argument(std::string(who) + ": width must be positive");
  const double needed = hg_extent_requirement(k, tau);
  if (grid.omega_max < needed || -grid.omega_min < needed)
    throw std::invalid_argument(std::string(who) + ": grid too small for order " +
                                std::to_string(k) + " (needs |omega| >= " +
                                std::to_string(needed) + ")");
}

}  // namespace

SpectralAmplitude hermite_gaussian(int k, double tau, const FrequencyGrid& grid) {
  check_mode_fits(k, tau, grid, "hermite_gaussian");
  SpectralAmplitude mode{grid, {}};
  mode.values = (std::sqrt(tau) * hermite_function(k, tau * grid.points)).cast<std::complex<double>>();
  return mode;
}

SpectralAmplitude gaussian_gate(double tau_g, const FrequencyGrid& grid) {
  return hermite_gaussian(0, tau_g, grid);
}

SpectralAmplitude gaussian_phasematch(double omega_ph, const FrequencyGrid& grid) {
  if (!(omega_ph > 0.0))
    throw std::invalid_argument("gaussian_phasematch: width must be positive");
  SpectralAmplitude profile{grid, {}};
  profile.values =
      (-(grid.points / omega_ph).square() / 2.0).exp().cast<std::complex<double>>();
  return profile;
}

double phase_matching_width(double length, double v_s, double v_c) {
  if (!(length > 0.0)) throw std::invalid_argument("phase_matching_width: length must be positive");
  if (v_s == 0.0 || v_c == 0.0)
    throw std::invalid_argument("phase_matching_width: group velocities must be nonzero");
  const double walkoff = std::abs(1.0 / v_c - 1.0 / v_s);
  if (walkoff == 0.0)
    throw std::invalid_argument("phase_matching_width: v_s == v_c gives unbounded width");
  return 1.0 / (std::sqrt(kSincGaussianGamma / 2.0) * walkoff * length);
}

FilterModel FilterModel::open() { return FilterModel{}; }

FilterModel FilterModel::gaussian(double omega_f) {
  if (!(omega_f > 0.0)) throw std::invalid_argument("FilterModel: gaussian width must be positive");
  FilterModel f;
  f.shape = Shape::gaussian;
  f.omega_f = omega_f;
  return f;
}

FilterModel FilterModel::custom(SpectralAmplitude transmission) {
  if ((transmission.values.abs() > 1.0 + 1e-12).any())
    throw std::invalid_argument("FilterModel: |F| must not exceed 1");
  if ((transmission.values.imag() != 0.0).any())
    warn("FilterModel: complex (phase) transmission accepted but untested");
  FilterModel f;
  f.shape = Shape::custom;
  f.samples = std::move(transmission);
  return f;
}

Eigen::ArrayXcd FilterModel::amplitude_on(const FrequencyGrid& grid) const {
  switch (shape) {
    case Shape::open:
      return Eigen::ArrayXcd::Ones(grid.size());
    case Shape::gaussian:
      return (-(grid.points / omega_f).square() / 2.0).exp().cast<std::complex<double>>();
    case Shape::custom:
      if (!samples.grid.same_as(grid))
        throw std::invalid_argument("FilterModel: transmission sampled on a different grid");
      return samples.values;
  }
  throw std::logic_error("FilterModel: unknown shape");
}

Eigen::ArrayXd FilterModel::power_on(const FrequencyGrid& grid) const {
  if (shape == Shape::gaussian) return (-(grid.points / omega_f).square()).exp();
  return amplitude_on(grid).abs2();
}

namespace {

DetectorModel make_detector(DetectorModel::Response response, double tau_d, double efficiency) {
  if (!(efficiency >= 0.0 && efficiency <= 1.0))
    throw std::invalid_argument("DetectorModel: efficiency must lie in [0, 1]");
  DetectorModel d;
  d.response = response;
  d.tau_d = tau_d;
  d.efficiency = efficiency;
  return d;
}

}  // namespace

DetectorModel DetectorModel::slow(double efficiency) {
  return make_detector(Response::slow, 0.0, efficiency);
}

DetectorModel DetectorModel::instant(double efficiency) {
  return make_detector(Response::instant, 0.0, efficiency);
}

DetectorModel DetectorModel::gaussian_jitter(double tau_d, double efficiency) {
  if (!(tau_d > 0.0)) throw std::invalid_argument("DetectorModel: jitter must be positive");
  return make_detector(Response::gaussian_jitter, tau_d, efficiency);
}

double DetectorModel::coherence(double nu) const {
  switch (response) {
    case Response::instant:
      return 1.0;
    case Response::gaussian_jitter:
      return std::exp(-tau_d * tau_d * nu * nu / 4.0);
    case Response::slow:
      throw std::logic_error("DetectorModel: slow response has no pointwise coherence");
  }
  throw std::logic_error("DetectorModel: unknown response");
}

}  // namespace photonsub
