#pragma once

#include <Eigen/Dense>
#include <complex>

namespace photonsub {

/// Truncated M-mode Fock space (M ≤ 4, per-mode photon cutoff ≤ 6). Mode k has
/// index stride (cutoff+1)^k in the flattened amplitude vector.
struct FockSpace {
  int n_modes = 1;
  int cutoff = 2;  // highest photon number kept per mode

  long dim() const;
  long stride(int mode) const;
};

FockSpace make_fock_space(int n_modes, int cutoff);

/// Pure state in a truncated Fock space.
struct FockState {
  FockSpace space;
  Eigen::VectorXcd amplitudes;
};

/// Weak-squeezing truncation |ψ⟩ ∝ |0⟩ + 2^{-1/2} Σ_k ξ_k |2_k⟩, normalized.
/// Requires cutoff ≥ 2 and n_modes = len(ξ).
FockState weak_squeezed_vector(const Eigen::ArrayXcd& xi, int cutoff = 2);

/// â_mode applied to a state vector.
Eigen::VectorXcd apply_lowering(const FockSpace& space, const Eigen::VectorXcd& psi, int mode);

/// Conditioned state after a herald: ρ⁻ = Σ_j σ_j ŝ_j ρ ŝ_j† / P with
/// ŝ_j = Σ_k c_jk â_k and P = Σ_j σ_j ⟨ŝ_j†ŝ_j⟩. Throws when P vanishes
/// (e.g. vacuum input — conditioning undefined).
struct ConditionedState {
  FockSpace space;
  Eigen::MatrixXcd rho;      // normalized
  double probability = 0.0;  // P
};

ConditionedState conditioned_density(const FockState& state, const Eigen::ArrayXd& sigma,
                                     const Eigen::MatrixXcd& c);

/// Reduced density matrix of one mode.
Eigen::MatrixXcd partial_trace_single(const FockSpace& space, const Eigen::MatrixXcd& rho,
                                      int keep);

/// Brute-force metrics of a conditioned density matrix in the weak-squeezing sector:
/// purity = tr ρ², the kept-mode marginal, its one-photon population p_s, and the
/// largest eigenvalue p_f of the one-photon block (best single-mode herald weight).
struct OracleMetrics {
  double purity = 0.0;
  Eigen::MatrixXcd marginal;
  double p_s = 0.0;
  double p_f = 0.0;
};

OracleMetrics oracle_metrics(const FockSpace& space, const Eigen::MatrixXcd& rho, int s);

}  // namespace photonsub
