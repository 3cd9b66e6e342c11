#pragma once

#include <Eigen/Dense>
#include <functional>

#include "photonsub/subtraction.hpp"

namespace photonsub {

/// Pulsed squeezing comb: pulses of HG temporal shape (width pulse_tau) repeating
/// with period T₀ inside a cavity of decay rate γ_c. The squeezing spectrum is
/// parametrized by the intra-comb phase θ ∈ [−π, π].
struct CombSpec {
  double pulse_period = 1.0;     // T₀
  double cavity_decay = 1.0;     // γ_c
  double pulse_tau = 0.05;       // temporal width of the HG pulse shapes
  int samples_per_period = 64;   // even, ≥ 8
  double envelope_cutoff = 1e-8; // relative envelope weight below which pulses are dropped
};

/// Per-pulse photon number n_{k,0} = ∫ n_k(θ) dθ / 2π over θ ∈ [−π, π]
/// (composite Simpson quadrature, deterministic panel count).
double per_pulse_photon_number(const std::function<double(double)>& density, int panels = 4096);

/// Lorentzian squeezing density n(θ) = n_peak / (1 + (2θ/(γ_c T₀))²).
std::function<double(double)> lorentzian_theta_density(double n_peak, double gamma_c_T0);

/// Subtraction summary for the comb: same formulas as the single-pulse mode route,
/// fed with per-pulse photon numbers. With a flat θ-density this reduces to the
/// single-pulse report exactly.
SubtractionReport comb_report(const Eigen::ArrayXd& sigma, const Eigen::MatrixXcd& overlaps,
                              const Eigen::ArrayXd& per_pulse_n);

/// Real temporal profile sampled uniformly in t.
struct TimeProfile {
  Eigen::ArrayXd times;
  Eigen::ArrayXd values;
};

/// Temporal mode heralded by a click at t_click: the pulse train Σ_l w_l ψ(t − lT₀)
/// with double-sided exponential weights w_l = e^{−γ_c|lT₀ − t_click|} and
/// ψ(t) = Σ_k coeffs_k ψ_k(t/τ_p)/√τ_p, normalized to unit norm on the returned grid.
/// Pulses with relative weight below envelope_cutoff are dropped; pulse centers are
/// exact samples (samples_per_period even).
TimeProfile heralded_temporal_mode(const CombSpec& comb, const Eigen::ArrayXd& pulse_coeffs,
                                   double t_click);

}  // namespace photonsub
