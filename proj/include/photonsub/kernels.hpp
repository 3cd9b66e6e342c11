#pragma once

#include <Eigen/Dense>
#include <complex>

#include "photonsub/grid.hpp"
#include "photonsub/modes.hpp"

namespace photonsub {

/// Hermitian positive-semidefinite subtraction kernel S(ω,ω′) with an explicit overall
/// scale (r², |C|², detector efficiency). Two storage variants:
///  - diagonal: S(ω,ω′) = scale·d(ω)·δ(ω−ω′). The δ is never discretized — the kernel
///    acts as a multiplication operator and is projected with single integrals.
///  - dense: S(ω,ω′) = scale·H(ω_i,ω_j) sampled on grid×grid, H = H†.
struct KernelOperator {
  FrequencyGrid grid;
  bool is_diagonal = true;
  double scale = 0.0;
  Eigen::ArrayXd diagonal;   // d(ω) ≥ 0, diagonal variant
  Eigen::MatrixXcd matrix;   // H, dense variant

  /// ∫S(ω,ω)dω = scale·Σ d_i Δω (diagonal) or scale·Σ H_ii Δω (dense).
  double trace() const;
};

/// First-order detection coupling R(ν,ω) between input frequency ω and detected
/// frequency ν, with complex amplitude `scale` factored out:
///  - diagonal: R(ν,ω) = scale·g(ω)·δ(ν−ω)   (beamsplitter tap, g ≡ 1)
///  - dense:    R(ν,ω) = scale·M(ν_i,ω_j)    (rows ν, columns ω)
struct ParametricKernel {
  FrequencyGrid grid;
  bool is_diagonal = true;
  std::complex<double> scale = 0.0;
  Eigen::ArrayXcd diagonal;  // g(ω)
  Eigen::MatrixXcd matrix;   // M(ν,ω)
};

/// Beamsplitter tap with amplitude reflectivity r: R(ν,ω) = r·δ(ν−ω).
/// Requires 0 ≤ r ≤ 1; warns above 0.3 (perturbative regime).
ParametricKernel beamsplitter_coupling(double r, const FrequencyGrid& grid);

/// Sum-frequency coupling R(ν,ω) = C·α(ν−ω)·Φ(ν) from a gate spectrum and a
/// phase-matching profile sampled on the same grid. The gate is evaluated at
/// frequency differences by linear interpolation of its samples.
ParametricKernel upconversion_coupling(const SpectralAmplitude& gate,
                                       const SpectralAmplitude& phasematch,
                                       std::complex<double> coupling);

/// Slow-detector beamsplitter kernel: S(ω,ω′) = r²|F(ω)|²δ(ω−ω′)  (diagonal variant).
KernelOperator beamsplitter_kernel_slow(double r, const FilterModel& filter,
                                        const FrequencyGrid& grid);

/// Slow-detector up-conversion kernel
///   S(ω,ω′) = |C|² ∫dν α*(ν−ω)α(ν−ω′)|Φ(ν)|²|F(ν)|²
/// with the filter applied at the up-converted frequency. Dense, PSD by construction.
KernelOperator upconversion_kernel(const SpectralAmplitude& gate,
                                   const SpectralAmplitude& phasematch,
                                   std::complex<double> coupling,
                                   const FilterModel& filter,
                                   const FrequencyGrid& grid);

/// Kernel for a click at instant t_click with the given detector response:
///   S_t(ω,ω′) = ∫∫dν dν′ R*(ν,ω)R(ν′,ω′)F*(ν)F(ν′)Γ(ν−ν′)e^{i(ν′−ν)t}
/// Γ(0) = 1 (Gaussian jitter: Γ(ν) = exp(-τ_d²ν²/4); instant: Γ ≡ 1 → rank-1 kernel).
/// For Response::slow this returns the corresponding slow-detector kernel exactly.
/// The detector efficiency multiplies the scale.
KernelOperator time_resolved_kernel(const ParametricKernel& coupling,
                                    const FilterModel& filter,
                                    const DetectorModel& detector,
                                    double t_click);

}  // namespace photonsub
