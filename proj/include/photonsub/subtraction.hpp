#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "photonsub/kernels.hpp"
#include "photonsub/schmidt.hpp"
#include "photonsub/squeezed_state.hpp"

namespace photonsub {

/// Kernel projected onto the squeezed-mode basis: S_kk′ = ⟨u_k, S u_k′⟩.
/// Entries include the kernel scale; `scale` documents it (r², |C|², γ included)
/// so probabilities can also be reported in normalized form.
struct BasisSubtractionMatrix {
  Eigen::MatrixXcd S;
  double scale = 0.0;
};

/// Project a kernel onto an orthonormal basis. Diagonal kernels use single
/// integrals S_kk′ = scale·Σ_i u_k*(ω_i) d(ω_i) u_k′(ω_i) Δω; dense kernels use
/// the double quadrature scale·Δω²·U†HU.
BasisSubtractionMatrix project_kernel(const KernelOperator& kernel,
                                      const std::vector<SpectralAmplitude>& basis);

/// Total subtraction probability P = Σ_k n_k S_kk.
double total_probability(const BasisSubtractionMatrix& S, const Eigen::ArrayXd& n);

/// Purity of the conditioned state, π = Σ_{kk′} n_k n_k′ |S_kk′|² / P².
/// Throws when P = 0 (nothing to condition on).
double multimode_purity(const BasisSubtractionMatrix& S, const Eigen::ArrayXd& n);

/// Per-mode probability p_s = n_s S_ss / P that the photon was removed from mode s
/// (Σ_s p_s = 1), and the resulting single-mode purity π_s = p_s² + (1−p_s)².
Eigen::ArrayXd single_mode_probabilities(const BasisSubtractionMatrix& S,
                                         const Eigen::ArrayXd& n);
double single_mode_purity(double p_s);

/// Overlaps c_jk = ⟨v_j, u_k⟩ between subtraction modes and the squeezed basis.
Eigen::MatrixXcd mode_overlaps(const SchmidtDecomposition& d,
                               const MultimodeSqueezedState& state);

/// P and π evaluated from a mode decomposition instead of the projected matrix:
///   P = Σ_j σ_j Σ_k |c_jk|² n_k,      π = Σ_{jj′} σ_j σ_j′ |Σ_k c_jk c_j′k* n_k|² / P².
/// Equivalent to the matrix route whenever the subtraction modes lie in the basis span.
double probability_from_modes(const Eigen::ArrayXd& sigma, const Eigen::MatrixXcd& c,
                              const Eigen::ArrayXd& n);
double purity_from_modes(const Eigen::ArrayXd& sigma, const Eigen::MatrixXcd& c,
                         const Eigen::ArrayXd& n);

/// Weak-squeezing herald analysis. L_kk′ = ξ_k* ξ_k′ S_kk′ is Hermitian PSD; its
/// eigenvalues λ_l (descending) give the heralded-mode mixture, P = Σλ_l = tr L,
/// and the fidelity of the best single-mode description p_f = λ_0/P ≥ max_s p_s.
struct HeraldReport {
  Eigen::MatrixXcd L;
  Eigen::ArrayXd lambdas;
  Eigen::MatrixXcd herald_modes;  // columns: coefficients of w_l over u_k
  double probability = 0.0;       // tr L (weak-squeezing P)
  double p_f = 0.0;
};

HeraldReport herald(const BasisSubtractionMatrix& S, const Eigen::ArrayXcd& xi);

/// Summary of a subtraction configuration.
struct SubtractionReport {
  double probability = 0.0;       // P, absolute (includes kernel scale)
  double p_normalized = 0.0;      // P / (scale · mean n_k)
  std::string normalization;      // how p_normalized was formed
  double purity = 0.0;            // π
  std::optional<double> schmidt_K;
  Eigen::ArrayXd p_s;             // per-mode probabilities
  Eigen::ArrayXd pi_s;            // per-mode purities
  Eigen::MatrixXcd overlaps;      // c_jk (mode route only, else 0×0)
};

/// Matrix route: everything derivable from S_kk′ and n_k.
SubtractionReport subtraction_report(const BasisSubtractionMatrix& S, const Eigen::ArrayXd& n);

/// Mode route: adds the Schmidt number and overlaps; P and π via the (σ, c) formulas.
SubtractionReport subtraction_report(const SchmidtDecomposition& d,
                                     const MultimodeSqueezedState& state,
                                     PhotonNumberConvention convention);

}  // namespace photonsub
