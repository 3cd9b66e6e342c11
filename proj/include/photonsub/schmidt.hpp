#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "photonsub/grid.hpp"
#include "photonsub/kernels.hpp"

namespace photonsub {

/// Eigenmodes v_j and efficiencies σ_j of a subtraction kernel:
/// S(ω,ω′) = Σ_j σ_j v_j(ω) v_j*(ω′). Modes are orthonormal under inner_product;
/// efficiencies are ≥ 0, sorted descending, and carry Δω and the kernel scale so
/// that Σσ_j equals the kernel trace (up to truncation).
struct SchmidtDecomposition {
  std::vector<SpectralAmplitude> modes;
  Eigen::ArrayXd efficiencies;
};

/// Numerical eigendecomposition of a dense kernel. Eigenvectors are phase-fixed
/// (largest-magnitude sample real positive); near-degenerate efficiencies are ordered
/// by the frequency of the mode's peak magnitude, ascending. Modes with
/// σ_j < truncation·σ_0 are dropped. Diagonal kernels are multiplication operators
/// with no discrete decomposition and are rejected.
SchmidtDecomposition decompose(const KernelOperator& kernel, double truncation = 1e-10);

/// Schmidt number K = (Σσ_j)² / Σσ_j². Throws if the efficiencies are empty or all zero.
double schmidt_number(const Eigen::ArrayXd& efficiencies);
double schmidt_number(const SchmidtDecomposition& d);

/// Closed-form decomposition of the Gaussian jittered-beamsplitter kernel
/// S = r²F*(ω)F(ω′)Γ(ω−ω′) with |F|² of width ω_f and jitter τ_d (ε = τ_d ω_f):
/// HG modes of width τ = (1+ε²)^{1/4}/ω_f and geometric efficiencies
/// σ_j = T(1−q)q^j with ratio q = ε²/(1+√(1+ε²))² and T = r²√π ω_f the kernel
/// trace, giving K = (1+q)/(1−q) = √(1+ε²).
SchmidtDecomposition analytic_bs_decomposition(double omega_f, double tau_d, double r,
                                               const FrequencyGrid& grid,
                                               double truncation = 1e-10);

/// Closed-form decomposition of the Gaussian up-conversion kernel (gate width τ_g,
/// phase-matching width ω_ph, filter width ω_f; pass ω_f = +inf for no filter).
/// With 1/W² = 1/ω_ph² + 1/ω_f² and K = √(1+τ_g²W²): HG modes of width τ = τ_g/√K,
/// σ_j = T(1−q)q^j, q = (K−1)/(K+1), T = |C|²√π W.
SchmidtDecomposition analytic_upconversion_decomposition(double tau_g, double omega_ph,
                                                         double omega_f,
                                                         std::complex<double> coupling,
                                                         const FrequencyGrid& grid,
                                                         double truncation = 1e-10);

}  // namespace photonsub
