#pragma once

#include <Eigen/Dense>
#include <complex>

namespace photonsub {

/// Square phase-space grid over α = x + iy, |x|,|y| ≤ half_extent, n×n samples.
/// n is odd so the origin is sampled exactly; axis points are symmetry-paired.
struct PhaseSpaceGrid {
  Eigen::ArrayXd axis;
  double half_extent = 0.0;
  double spacing = 0.0;

  int size() const { return static_cast<int>(axis.size()); }
};

/// half_extent ≥ 4 (captures vacuum-scale Gaussian tails), n odd ≥ 101.
PhaseSpaceGrid make_phase_grid(double half_extent, int n);

/// Grid adequate for states squeezed by ξ: extent and resolution scaled by e^{|ξ|}.
PhaseSpaceGrid adequate_phase_grid(std::complex<double> xi, double base_extent = 5.0,
                                   int base_points = 201);

/// Wigner function samples W(x_i + i y_j) = values(i, j).
struct WignerField {
  PhaseSpaceGrid grid;
  Eigen::MatrixXd values;
};

/// Squeezed-frame coordinate α̃ = α cosh r − α* e^{iθ} sinh r for ξ = r e^{iθ}.
std::complex<double> squeezed_coordinate(std::complex<double> alpha, std::complex<double> xi);

/// Wigner function of the single-mode marginal after subtraction,
///   W = p·W_s⁻ + (1−p)·W_s,
/// with W_s = (2/π)e^{−2|α̃|²} and W_s⁻ = (2/π)(4|α̃|²−1)e^{−2|α̃|²}.
/// W(0,0) = (2/π)(1−2p); it is negative at the origin iff p > 1/2.
WignerField marginal_wigner(double p, std::complex<double> xi, const PhaseSpaceGrid& grid);

/// Heralded-mode mixture p·|1⟩⟨1| + (1−p)·|0⟩⟨0| (unsqueezed frame, α̃ = α).
WignerField fock_mixture_wigner(double p, const PhaseSpaceGrid& grid);

/// Strict negativity criterion at the origin.
bool negative_at_origin(double p);

/// ∫W d²α by the grid sum (trapezoid weights are uniform for decayed tails).
double integrate(const WignerField& field);

}  // namespace photonsub
