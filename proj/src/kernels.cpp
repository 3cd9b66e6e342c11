#include "photonsub/kernels.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "photonsub/errors.hpp"

namespace photonsub {

namespace {

using Cx = std::complex<double>;

void hermitize(Eigen::MatrixXcd& m) { m = 0.5 * (m + m.adjoint()).eval(); }

// Gate samples at all pairwise grid differences jΔω, j ∈ [−(n−1), n−1]; the
// differences land on (half-)multiples of Δω, so linear interpolation is exact
// for odd grids and midpoint-exact for even ones.
Eigen::ArrayXcd shifted_gate_table(const SpectralAmplitude& gate) {
  const int n = gate.grid.size();
  Eigen::ArrayXcd table(2 * n - 1);
  for (int j = -(n - 1); j <= n - 1; ++j)
    table[j + n - 1] = interpolate(gate, j * gate.grid.spacing);
  return table;
}

void check_reflectivity(double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::invalid_argument("beamsplitter: invalid reflectivity (need 0 <= r <= 1)");
  if (r > 0.3) warn("beamsplitter: r > 0.3 leaves the single-subtraction regime");
}

}  // namespace

double KernelOperator::trace() const {
  const double body = is_diagonal ? diagonal.sum() : matrix.trace().real();
  return scale * body * grid.spacing;
}

ParametricKernel beamsplitter_coupling(double r, const FrequencyGrid& grid) {
  check_reflectivity(r);
  ParametricKernel k;
  k.grid = grid;
  k.is_diagonal = true;
  k.scale = r;
  k.diagonal = Eigen::ArrayXcd::Ones(grid.size());
  return k;
}

ParametricKernel upconversion_coupling(const SpectralAmplitude& gate,
                                       const SpectralAmplitude& phasematch,
                                       std::complex<double> coupling) {
  if (!gate.grid.same_as(phasematch.grid))
    throw std::invalid_argument("upconversion_coupling: gate and phase matching on different grids");
  const int n = gate.grid.size();
  const Eigen::ArrayXcd table = shifted_gate_table(gate);
  ParametricKernel k;
  k.grid = gate.grid;
  k.is_diagonal = false;
  k.scale = coupling;
  k.matrix.resize(n, n);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i) k.matrix(m, i) = table[m - i + n - 1] * phasematch.values[m];
  return k;
}

KernelOperator beamsplitter_kernel_slow(double r, const FilterModel& filter,
                                        const FrequencyGrid& grid) {
  check_reflectivity(r);
  KernelOperator kernel;
  kernel.grid = grid;
  kernel.is_diagonal = true;
  kernel.scale = r * r;
  kernel.diagonal = filter.power_on(grid);
  return kernel;
}

KernelOperator upconversion_kernel(const SpectralAmplitude& gate,
                                   const SpectralAmplitude& phasematch,
                                   std::complex<double> coupling, const FilterModel& filter,
                                   const FrequencyGrid& grid) {
  if (!gate.grid.same_as(grid) || !phasematch.grid.same_as(grid))
    throw std::invalid_argument("upconversion_kernel: inputs sampled on a different grid");
  const int n = grid.size();
  const Eigen::ArrayXd weight =
      (phasematch.values.abs2() * filter.power_on(grid)).sqrt();  // √(|Φ|²|F|²) at ν
  const Eigen::ArrayXcd table = shifted_gate_table(gate);

  KernelOperator kernel;
  kernel.grid = grid;
  kernel.is_diagonal = false;
  kernel.scale = std::norm(coupling);

  const bool real_inputs = (gate.values.imag() == 0.0).all();
  if (real_inputs) {
    Eigen::MatrixXd b(n, n);
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i) b(m, i) = weight[m] * table[m - i + n - 1].real();
    Eigen::MatrixXd h = (b.transpose() * b) * grid.spacing;
    h = 0.5 * (h + h.transpose()).eval();
    kernel.matrix = h.cast<Cx>();
  } else {
    Eigen::MatrixXcd b(n, n);
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i) b(m, i) = weight[m] * table[m - i + n - 1];
    kernel.matrix = (b.adjoint() * b) * grid.spacing;
    hermitize(kernel.matrix);
  }
  return kernel;
}

KernelOperator time_resolved_kernel(const ParametricKernel& coupling, const FilterModel& filter,
                                    const DetectorModel& detector, double t_click) {
  const FrequencyGrid& grid = coupling.grid;
  const int n = grid.size();
  const double scale = std::norm(coupling.scale) * detector.efficiency;

  KernelOperator kernel;
  kernel.grid = grid;
  kernel.scale = scale;

  if (detector.response == DetectorModel::Response::slow) {
    const Eigen::ArrayXd fpow = filter.power_on(grid);
    if (coupling.is_diagonal) {
      kernel.is_diagonal = true;
      kernel.diagonal = coupling.diagonal.abs2() * fpow;
    } else {
      kernel.is_diagonal = false;
      const Eigen::MatrixXcd b = fpow.sqrt().matrix().asDiagonal() * coupling.matrix;
      kernel.matrix = (b.adjoint() * b) * grid.spacing;
      hermitize(kernel.matrix);
    }
    return kernel;
  }

  kernel.is_diagonal = false;
  const Eigen::ArrayXcd f = filter.amplitude_on(grid);
  const Eigen::ArrayXcd phase =
      (Cx(0.0, 1.0) * t_click * grid.points).exp();  // e^{iνt} at detection

  if (detector.response == DetectorModel::Response::instant) {
    // Γ ≡ 1 collapses the kernel to rank one: S ∝ q*(ω) q(ω′).
    Eigen::VectorXcd q;
    if (coupling.is_diagonal)
      q = (coupling.diagonal * f * phase).matrix();
    else
      q = ((f * phase).matrix().transpose() * coupling.matrix).transpose() * grid.spacing;
    kernel.matrix = q.conjugate() * q.transpose();
    hermitize(kernel.matrix);
    return kernel;
  }

  // Gaussian jitter, Γ(ν) = exp(-τ_d²ν²/4) with Γ(0) = 1.
  if (coupling.is_diagonal) {
    const Eigen::ArrayXcd q = coupling.diagonal * f * phase;
    kernel.matrix.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        kernel.matrix(i, j) =
            std::conj(q[i]) * q[j] * detector.coherence(grid.points[i] - grid.points[j]);
  } else {
    Eigen::MatrixXd gamma(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gamma(i, j) = detector.coherence(grid.points[i] - grid.points[j]);
    const Eigen::MatrixXcd q = (f * phase).matrix().asDiagonal() * coupling.matrix;
    kernel.matrix = q.adjoint() * (gamma * q) * (grid.spacing * grid.spacing);
  }
  hermitize(kernel.matrix);
  return kernel;
}

}  // namespace photonsub
