#include "photonsub/subtraction.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "photonsub/errors.hpp"

namespace photonsub {

namespace {

Eigen::MatrixXcd basis_matrix(const std::vector<SpectralAmplitude>& basis,
                              const FrequencyGrid& grid) {
  if (basis.empty()) throw std::invalid_argument("project_kernel: empty basis");
  Eigen::MatrixXcd u(grid.size(), static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!basis[k].grid.same_as(grid))
      throw std::invalid_argument("project_kernel: basis mode on a different grid");
    u.col(static_cast<int>(k)) = basis[k].values.matrix();
  }
  return u;
}

void check_sizes(const BasisSubtractionMatrix& s, const Eigen::ArrayXd& n) {
  if (s.S.rows() != n.size())
    throw std::invalid_argument("subtraction: photon-number vector does not match the basis");
  if ((n < 0.0).any()) throw std::invalid_argument("subtraction: negative photon number");
}

double weighted_trace(const BasisSubtractionMatrix& s, const Eigen::ArrayXd& n) {
  return (n * s.S.diagonal().real().array()).sum();
}

}  // namespace

BasisSubtractionMatrix project_kernel(const KernelOperator& kernel,
                                      const std::vector<SpectralAmplitude>& basis) {
  const Eigen::MatrixXcd u = basis_matrix(basis, kernel.grid);
  const double d_omega = kernel.grid.spacing;
  BasisSubtractionMatrix out;
  out.scale = kernel.scale;
  if (kernel.is_diagonal) {
    // Single integrals S_kk′ = scale·Δω·Σ_i u_k*(ω_i) d_i u_k′(ω_i), accumulated
    // in extended precision: projections of high-order modes onto smooth weights
    // cancel by many orders of magnitude, and double accumulation would leave
    // ~1e-17 of absolute noise on entries that are legitimately ~1e-11.
    const int count = static_cast<int>(basis.size());
    out.S.resize(count, count);
    for (int a = 0; a < count; ++a) {
      for (int b = a; b < count; ++b) {
        long double real_sum = 0.0L, imag_sum = 0.0L;
        for (int i = 0; i < kernel.grid.size(); ++i) {
          const std::complex<double> term = std::conj(u(i, a)) * u(i, b) * kernel.diagonal[i];
          real_sum += term.real();
          imag_sum += term.imag();
        }
        const long double weight = static_cast<long double>(kernel.scale) * d_omega;
        out.S(a, b) = std::complex<double>(static_cast<double>(real_sum * weight),
                                           static_cast<double>(imag_sum * weight));
        out.S(b, a) = std::conj(out.S(a, b));
      }
    }
  } else {
    out.S = kernel.scale * d_omega * d_omega * (u.adjoint() * kernel.matrix * u);
    out.S = 0.5 * (out.S + out.S.adjoint()).eval();
  }
  return out;
}

double total_probability(const BasisSubtractionMatrix& s, const Eigen::ArrayXd& n) {
  check_sizes(s, n);
  return weighted_trace(s, n);
}

double multimode_purity(const BasisSubtractionMatrix& s, const Eigen::ArrayXd& n) {
  check_sizes(s, n);
  const double p = weighted_trace(s, n);
  if (!(p > 0.0)) throw std::invalid_argument("multimode_purity: subtraction probability is zero");
  const double num = (n.matrix().transpose() * s.S.cwiseAbs2() * n.matrix()).value();
  return num / (p * p);
}

Eigen::ArrayXd single_mode_probabilities(const BasisSubtractionMatrix& s,
                                         const Eigen::ArrayXd& n) {
  check_sizes(s, n);
  const double p = weighted_trace(s, n);
  if (!(p > 0.0))
    throw std::invalid_argument("single_mode_probabilities: subtraction probability is zero");
  return n * s.S.diagonal().real().array() / p;
}

double single_mode_purity(double p_s) { return p_s * p_s + (1.0 - p_s) * (1.0 - p_s); }

Eigen::MatrixXcd mode_overlaps(const SchmidtDecomposition& d, const MultimodeSqueezedState& state) {
  Eigen::MatrixXcd c(static_cast<int>(d.modes.size()), static_cast<int>(state.basis.size()));
  for (std::size_t j = 0; j < d.modes.size(); ++j)
    for (std::size_t k = 0; k < state.basis.size(); ++k)
      c(static_cast<int>(j), static_cast<int>(k)) = inner_product(d.modes[j], state.basis[k]);
  return c;
}

double probability_from_modes(const Eigen::ArrayXd& sigma, const Eigen::MatrixXcd& c,
                              const Eigen::ArrayXd& n) {
  if (c.rows() != sigma.size() || c.cols() != n.size())
    throw std::invalid_argument("probability_from_modes: inconsistent shapes");
  return (sigma * (c.cwiseAbs2() * n.matrix()).array()).sum();
}

double purity_from_modes(const Eigen::ArrayXd& sigma, const Eigen::MatrixXcd& c,
                         const Eigen::ArrayXd& n) {
  const double p = probability_from_modes(sigma, c, n);
  if (!(p > 0.0)) throw std::invalid_argument("purity_from_modes: subtraction probability is zero");
  // G_jj′ = Σ_k c_jk c_j′k* n_k; π = Σ σ_j σ_j′ |G_jj′|² / P².
  const Eigen::MatrixXcd g = c * n.matrix().asDiagonal() * c.adjoint();
  const double num = (sigma.matrix().transpose() * g.cwiseAbs2() * sigma.matrix()).value();
  return num / (p * p);
}

HeraldReport herald(const BasisSubtractionMatrix& s, const Eigen::ArrayXcd& xi) {
  if (s.S.rows() != xi.size())
    throw std::invalid_argument("herald: xi does not match the basis");
  HeraldReport report;
  report.L = xi.conjugate().matrix().asDiagonal() * s.S * xi.matrix().asDiagonal();
  report.L = 0.5 * (report.L + report.L.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(report.L);
  if (solver.info() != Eigen::Success) throw numerical_error("herald: eigensolver failed");
  const int k = static_cast<int>(xi.size());
  report.lambdas = solver.eigenvalues().reverse().array();
  report.herald_modes.resize(k, k);
  for (int j = 0; j < k; ++j) report.herald_modes.col(j) = solver.eigenvectors().col(k - 1 - j);
  report.probability = report.lambdas.sum();
  if (!(report.probability > 0.0))
    throw std::invalid_argument("herald: subtraction probability is zero");
  report.p_f = report.lambdas[0] / report.probability;
  return report;
}

namespace {

void fill_common(SubtractionReport& r, const BasisSubtractionMatrix& s, const Eigen::ArrayXd& n) {
  r.probability = total_probability(s, n);
  const double mean_n = n.mean();
  if (s.scale > 0.0 && mean_n > 0.0) {
    r.p_normalized = r.probability / (s.scale * mean_n);
    r.normalization = "P / (scale * mean photon number)";
  } else {
    r.p_normalized = r.probability;
    r.normalization = "absolute (scale or photon number vanishes)";
  }
  r.purity = multimode_purity(s, n);
  r.p_s = single_mode_probabilities(s, n);
  r.pi_s.resize(r.p_s.size());
  for (int i = 0; i < r.p_s.size(); ++i) r.pi_s[i] = single_mode_purity(r.p_s[i]);
}

}  // namespace

SubtractionReport subtraction_report(const BasisSubtractionMatrix& s, const Eigen::ArrayXd& n) {
  SubtractionReport r;
  fill_common(r, s, n);
  return r;
}

SubtractionReport subtraction_report(const SchmidtDecomposition& d,
                                     const MultimodeSqueezedState& state,
                                     PhotonNumberConvention convention) {
  const Eigen::ArrayXd n = photon_numbers(state, convention);
  const Eigen::MatrixXcd c = mode_overlaps(d, state);
  // Equivalent projected matrix: S_kk′ = Σ_j σ_j c_jk* c_jk′ (scale already in σ).
  BasisSubtractionMatrix s;
  s.S = c.adjoint() * d.efficiencies.matrix().asDiagonal() * c;
  s.S = 0.5 * (s.S + s.S.adjoint()).eval();
  s.scale = d.efficiencies.sum();
  SubtractionReport r;
  r.probability = probability_from_modes(d.efficiencies, c, n);
  const double mean_n = n.mean();
  if (s.scale > 0.0 && mean_n > 0.0) {
    r.p_normalized = r.probability / (s.scale * mean_n);
    r.normalization = "P / (total efficiency * mean photon number)";
  } else {
    r.p_normalized = r.probability;
    r.normalization = "absolute (efficiency or photon number vanishes)";
  }
  r.purity = purity_from_modes(d.efficiencies, c, n);
  r.schmidt_K = schmidt_number(d);
  r.p_s = single_mode_probabilities(s, n);
  r.pi_s.resize(r.p_s.size());
  for (int i = 0; i < r.p_s.size(); ++i) r.pi_s[i] = single_mode_purity(r.p_s[i]);
  r.overlaps = c;
  return r;
}

}  // namespace photonsub
