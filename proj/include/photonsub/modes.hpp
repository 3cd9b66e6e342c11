#pragma once

#include <Eigen/Dense>
#include <complex>

#include "photonsub/grid.hpp"

namespace photonsub {

/// Gaussian width of sinc²(x) ≈ exp(-γ x²) on |x| ≲ 2, used for phase-matching estimates.
inline constexpr double kSincGaussianGamma = 0.193;

/// Normalized Hermite function ψ_k(x) = H_k(x) e^{-x²/2} / √(2^k k! √π), evaluated by the
/// stable normalized three-term recurrence (k ≤ 200). ∫ψ_k² dx = 1.
Eigen::ArrayXd hermite_function(int k, const Eigen::ArrayXd& x);

/// Minimal |ω| the grid must reach so mode k of width parameter τ fits: (√(2k+1)+4)/τ.
double hg_extent_requirement(int k, double tau);

/// Hermite–Gaussian mode u_k(ω) = √τ ψ_k(τω), unit-norm under inner_product.
/// Throws if the grid does not cover the mode support or k > 200.
SpectralAmplitude hermite_gaussian(int k, double tau, const FrequencyGrid& grid);

/// Up-conversion gate spectrum α(ω) ∝ exp(-τ_g²ω²/2), unit-norm (∫|α|²dω = 1).
SpectralAmplitude gaussian_gate(double tau_g, const FrequencyGrid& grid);

/// Phase-matching profile Φ(ω) = exp(-ω²/(2ω_ph²)), peak 1 (not normalized).
SpectralAmplitude gaussian_phasematch(double omega_ph, const FrequencyGrid& grid);

/// Phase-matching width ω_ph ≈ 1/(√(γ/2)·|1/v_c - 1/v_s|·l) for a crystal of length l
/// with signal/converted group velocities v_s, v_c. Throws when v_s == v_c.
double phase_matching_width(double length, double v_s, double v_c);

/// Spectral filter in front of the detector; |F(ω)| ≤ 1 everywhere.
struct FilterModel {
  enum class Shape { open, gaussian, custom };

  Shape shape = Shape::open;
  double omega_f = 0.0;             // gaussian width
  SpectralAmplitude samples;        // custom transmission

  static FilterModel open();
  static FilterModel gaussian(double omega_f);
  /// Complex (phase) transmissions are accepted but only |F| enters the tested paths.
  static FilterModel custom(SpectralAmplitude transmission);

  /// F(ω) on a grid. Gaussian: exp(-ω²/(2ω_f²)); open: 1; custom must match the grid.
  Eigen::ArrayXcd amplitude_on(const FrequencyGrid& grid) const;
  /// |F(ω)|².
  Eigen::ArrayXd power_on(const FrequencyGrid& grid) const;
};

/// Detection-time response of the heralding detector.
struct DetectorModel {
  enum class Response { slow, instant, gaussian_jitter };

  Response response = Response::slow;
  double tau_d = 0.0;       // jitter timescale for gaussian_jitter
  double efficiency = 1.0;  // uniform quantum efficiency γ ∈ [0, 1]

  static DetectorModel slow(double efficiency = 1.0);
  static DetectorModel instant(double efficiency = 1.0);
  static DetectorModel gaussian_jitter(double tau_d, double efficiency = 1.0);

  /// Detector coherence Γ(ν) = ∫γ(t)e^{iνt}dt / ∫γ(t)dt with Γ(0) = 1:
  /// instant → 1, gaussian_jitter → exp(-τ_d²ν²/4). Not meaningful for slow.
  double coherence(double nu) const;
};

}  // namespace photonsub
