#include "oracles.hpp"

#include <cmath>
#include <utility>

namespace oracle {

long double filtered_hg_overlap(int k, int kp, long double omega_f_tau) {
  if ((k + kp) % 2 != 0) return 0.0L;
  if (k < kp) std::swap(k, kp);

  // S_kk′ = ∫ψ_k(x)ψ_k′(x)e^{−x²/w²}dx with w = ω_f·τ. The weight combines with
  // the two mode Gaussians into e^{−a²x²}, a² = 1 + 1/w². Expanding each Hermite
  // polynomial over Hermite polynomials of the rescaled argument,
  //   H_k(x) = Σ_i a^{−(k−2i)} k!/(i!(k−2i)!) (a⁻²−1)^i H_{k−2i}(a x),
  // and using orthogonality under e^{−a²x²} leaves a sum over the matched order
  // m = k−2i = k′−2i′ in which every term carries the same sign (−1)^{i+i′} with
  // i+i′ ≡ (k−k′)/2 (mod 2) fixed — no cancellation, unlike the equivalent
  // terminating ₂F₁ form, which loses ~12 digits by k = k′ = 20.
  const long double ln2 = 0.6931471805599453094L;
  const long double a_sq = 1.0L + 1.0L / (omega_f_tau * omega_f_tau);
  const long double ln_a = 0.5L * std::log(a_sq);
  const long double ln_ratio = std::log(a_sq - 1.0L) - std::log(a_sq);

  long double sum = 0.0L;
  for (int m = kp; m >= 0; m -= 2) {
    const int i1 = (k - m) / 2;
    const int i2 = (kp - m) / 2;
    long double lg = 0.5L * (std::lgamma(k + 1.0L) + std::lgamma(kp + 1.0L)) -
                     std::lgamma(i1 + 1.0L) - std::lgamma(i2 + 1.0L) -
                     std::lgamma(m + 1.0L) + m * ln2 - 2.0L * m * ln_a -
                     0.5L * (k + kp) * ln2 - ln_a;
    if (i1 + i2 > 0) lg += (i1 + i2) * ln_ratio;  // guard 0·log(0) for open filters
    sum += std::exp(lg);
  }
  const long double sign = ((k - kp) / 2) % 2 == 0 ? 1.0L : -1.0L;
  return sign * sum;
}

Eigen::MatrixXcd random_psd(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd r(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r(i, j) = std::complex<double>(normal(rng), normal(rng));
  Eigen::MatrixXcd psd = (r.adjoint() * r) / static_cast<double>(dim);
  psd += 1e-9 * Eigen::MatrixXcd::Identity(dim, dim);
  return 0.5 * (psd + psd.adjoint());
}

Eigen::ArrayXcd random_xi(int dim, std::mt19937_64& rng, double max_abs) {
  std::uniform_real_distribution<double> mag(0.01, max_abs);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  Eigen::ArrayXcd xi(dim);
  for (int i = 0; i < dim; ++i) xi[i] = std::polar(mag(rng), phase(rng));
  return xi;
}

}  // namespace oracle
