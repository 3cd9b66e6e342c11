#include "photonsub/schmidt.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "photonsub/errors.hpp"
#include "photonsub/modes.hpp"

namespace photonsub {

namespace {

int peak_index(const Eigen::VectorXcd& v) {
  int idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return idx;
}

// Largest mode order that both survives the geometric truncation and still
// fits on the grid; warns when the grid is the binding constraint.
int mode_count(double q, double truncation, double tau_mode, const FrequencyGrid& grid) {
  int by_weight = 1;
  if (q > 0.0 && truncation > 0.0)
    by_weight = 1 + static_cast<int>(std::floor(std::log(truncation) / std::log(q)));
  int by_grid = 0;
  const double extent = std::min(-grid.omega_min, grid.omega_max);
  while (by_grid < by_weight && hg_extent_requirement(by_grid, tau_mode) <= extent) ++by_grid;
  if (by_grid < by_weight)
    warn("analytic decomposition truncated by grid extent before reaching the weight cutoff");
  return std::max(by_grid, 1);
}

SchmidtDecomposition geometric_family(double total, double q, double tau_mode,
                                      const FrequencyGrid& grid, double truncation) {
  const int count = mode_count(q, truncation, tau_mode, grid);
  SchmidtDecomposition d;
  d.efficiencies.resize(count);
  d.modes.reserve(count);
  for (int j = 0; j < count; ++j) {
    d.efficiencies[j] = total * (1.0 - q) * std::pow(q, j);
    d.modes.push_back(hermite_gaussian(j, tau_mode, grid));
  }
  if (q == 0.0) d.efficiencies[0] = total;  // single-mode limit, no geometric tail
  return d;
}

}  // namespace

SchmidtDecomposition decompose(const KernelOperator& kernel, double truncation) {
  if (kernel.is_diagonal)
    throw std::invalid_argument(
        "decompose: diagonal kernels have no discrete mode decomposition on this grid");
  const int n = kernel.grid.size();
  const double d_omega = kernel.grid.spacing;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(kernel.matrix * d_omega);
  if (solver.info() != Eigen::Success)
    throw numerical_error("decompose: eigensolver failed to converge");

  struct Entry {
    double sigma;
    int peak;
    int column;
  };
  std::vector<Entry> entries;
  entries.reserve(n);
  const double sigma_max = kernel.scale * solver.eigenvalues().maxCoeff();
  if (!(sigma_max > 0.0))
    throw numerical_error("decompose: kernel has no positive eigenvalue");
  for (int c = 0; c < n; ++c) {
    const double sigma = kernel.scale * solver.eigenvalues()[c];
    if (sigma < truncation * sigma_max) continue;
    entries.push_back({sigma, peak_index(solver.eigenvectors().col(c)), c});
  }

  // Descending by efficiency; degenerate pairs ordered by peak position so
  // the result is stable against solver ordering.
  const double tie = 1e-12 * sigma_max;
  std::sort(entries.begin(), entries.end(), [tie](const Entry& a, const Entry& b) {
    if (std::abs(a.sigma - b.sigma) > tie) return a.sigma > b.sigma;
    return a.peak < b.peak;
  });

  SchmidtDecomposition d;
  d.efficiencies.resize(static_cast<int>(entries.size()));
  d.modes.reserve(entries.size());
  const double root = std::sqrt(d_omega);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    d.efficiencies[static_cast<int>(i)] = entries[i].sigma;
    Eigen::VectorXcd v = solver.eigenvectors().col(entries[i].column) / root;
    const int idx = peak_index(v);
    const std::complex<double> pivot = v[idx];
    if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
    SpectralAmplitude mode;
    mode.grid = kernel.grid;
    mode.values = v.array();
    d.modes.push_back(std::move(mode));
  }
  return d;
}

double schmidt_number(const Eigen::ArrayXd& efficiencies) {
  const double s1 = efficiencies.sum();
  const double s2 = efficiencies.square().sum();
  if (!(s2 > 0.0)) throw std::invalid_argument("schmidt_number: all efficiencies vanish");
  return s1 * s1 / s2;
}

double schmidt_number(const SchmidtDecomposition& d) { return schmidt_number(d.efficiencies); }

SchmidtDecomposition analytic_bs_decomposition(double omega_f, double tau_d, double r,
                                               const FrequencyGrid& grid, double truncation) {
  if (!(omega_f > 0.0) || !(tau_d >= 0.0))
    throw std::invalid_argument("analytic_bs_decomposition: need omega_f > 0 and tau_d >= 0");
  const double eps = tau_d * omega_f;
  const double u = std::sqrt(1.0 + eps * eps);
  const double q = (u - 1.0) / (u + 1.0);
  const double tau_mode = std::sqrt(u) / omega_f;
  const double total = r * r * std::sqrt(M_PI) * omega_f;
  return geometric_family(total, q, tau_mode, grid, truncation);
}

SchmidtDecomposition analytic_upconversion_decomposition(double tau_g, double omega_ph,
                                                         double omega_f,
                                                         std::complex<double> coupling,
                                                         const FrequencyGrid& grid,
                                                         double truncation) {
  if (!(tau_g > 0.0) || !(omega_ph > 0.0) || !(omega_f > 0.0))
    throw std::invalid_argument(
        "analytic_upconversion_decomposition: need tau_g, omega_ph, omega_f > 0");
  double w;
  if (std::isinf(omega_f))
    w = omega_ph;
  else
    w = 1.0 / std::sqrt(1.0 / (omega_ph * omega_ph) + 1.0 / (omega_f * omega_f));
  const double big_k = std::sqrt(1.0 + tau_g * tau_g * w * w);
  const double q = (big_k - 1.0) / (big_k + 1.0);
  const double tau_mode = tau_g / std::sqrt(big_k);
  const double total = std::norm(coupling) * std::sqrt(M_PI) * w;
  return geometric_family(total, q, tau_mode, grid, truncation);
}

}  // namespace photonsub
