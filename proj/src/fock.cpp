#include "photonsub/fock.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "photonsub/errors.hpp"

namespace photonsub {

long FockSpace::dim() const {
  long d = 1;
  for (int k = 0; k < n_modes; ++k) d *= cutoff + 1;
  return d;
}

long FockSpace::stride(int mode) const {
  long s = 1;
  for (int k = 0; k < mode; ++k) s *= cutoff + 1;
  return s;
}

FockSpace make_fock_space(int n_modes, int cutoff) {
  if (n_modes < 1 || n_modes > 4)
    throw std::invalid_argument("make_fock_space: supported mode counts are 1..4");
  if (cutoff < 1 || cutoff > 6)
    throw std::invalid_argument("make_fock_space: supported cutoffs are 1..6");
  return {n_modes, cutoff};
}

FockState weak_squeezed_vector(const Eigen::ArrayXcd& xi, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("weak_squeezed_vector: cutoff must be >= 2");
  FockState state;
  state.space = make_fock_space(static_cast<int>(xi.size()), cutoff);
  state.amplitudes = Eigen::VectorXcd::Zero(state.space.dim());
  state.amplitudes[0] = 1.0;
  for (int k = 0; k < state.space.n_modes; ++k)
    state.amplitudes[2 * state.space.stride(k)] = xi[k] / std::sqrt(2.0);
  state.amplitudes.normalize();
  return state;
}

Eigen::VectorXcd apply_lowering(const FockSpace& space, const Eigen::VectorXcd& psi, int mode) {
  if (mode < 0 || mode >= space.n_modes)
    throw std::invalid_argument("apply_lowering: mode index out of range");
  if (psi.size() != space.dim())
    throw std::invalid_argument("apply_lowering: state size does not match the space");
  const long stride = space.stride(mode);
  const long base = space.cutoff + 1;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  for (long i = 0; i < psi.size(); ++i) {
    const long occupation = (i / stride) % base;
    if (occupation == 0) continue;
    out[i - stride] += std::sqrt(static_cast<double>(occupation)) * psi[i];
  }
  return out;
}

ConditionedState conditioned_density(const FockState& state, const Eigen::ArrayXd& sigma,
                                     const Eigen::MatrixXcd& c) {
  if (c.rows() != sigma.size())
    throw std::invalid_argument("conditioned_density: sigma and overlap rows differ");
  if (c.cols() != state.space.n_modes)
    throw std::invalid_argument("conditioned_density: overlap columns do not match the modes");
  const long d = state.space.dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  double probability = 0.0;
  for (int j = 0; j < sigma.size(); ++j) {
    Eigen::VectorXcd branch = Eigen::VectorXcd::Zero(d);
    for (int k = 0; k < state.space.n_modes; ++k)
      branch += c(j, k) * apply_lowering(state.space, state.amplitudes, k);
    probability += sigma[j] * branch.squaredNorm();
    rho += sigma[j] * (branch * branch.adjoint());
  }
  if (!(probability > 0.0))
    throw std::invalid_argument("conditioned_density: subtraction probability vanishes");
  ConditionedState out;
  out.space = state.space;
  out.rho = rho / probability;
  out.probability = probability;
  return out;
}

Eigen::MatrixXcd partial_trace_single(const FockSpace& space, const Eigen::MatrixXcd& rho,
                                      int keep) {
  if (keep < 0 || keep >= space.n_modes)
    throw std::invalid_argument("partial_trace_single: mode index out of range");
  if (rho.rows() != space.dim() || rho.cols() != space.dim())
    throw std::invalid_argument("partial_trace_single: density matrix does not match the space");
  const long stride = space.stride(keep);
  const long base = space.cutoff + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(base, base);
  for (long i = 0; i < space.dim(); ++i) {
    const long ni = (i / stride) % base;
    const long rest_i = i - ni * stride;
    for (long nj = 0; nj < base; ++nj) {
      const long j = rest_i + nj * stride;
      out(ni, nj) += rho(i, j);
    }
  }
  return out;
}

OracleMetrics oracle_metrics(const FockSpace& space, const Eigen::MatrixXcd& rho, int s) {
  OracleMetrics m;
  m.purity = (rho * rho).trace().real();
  m.marginal = partial_trace_single(space, rho, s);
  m.p_s = m.marginal(1, 1).real();

  // One-photon block: ⟨1_k|ρ|1_k′⟩ over all modes; its top eigenvalue is the
  // weight of the best single-mode description of the heralded photon.
  Eigen::MatrixXcd block(space.n_modes, space.n_modes);
  for (int k = 0; k < space.n_modes; ++k)
    for (int l = 0; l < space.n_modes; ++l) block(k, l) = rho(space.stride(k), space.stride(l));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
  if (solver.info() != Eigen::Success) throw numerical_error("oracle_metrics: eigensolver failed");
  m.p_f = solver.eigenvalues().maxCoeff();
  return m;
}

}  // namespace photonsub
