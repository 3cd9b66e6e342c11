#include "photonsub/comb.hpp"

#include <cmath>
#include <stdexcept>

#include "photonsub/modes.hpp"

namespace photonsub {

double per_pulse_photon_number(const std::function<double(double)>& density, int panels) {
  if (panels < 2 || panels % 2 != 0)
    throw std::invalid_argument("per_pulse_photon_number: need an even panel count >= 2");
  const double h = 2.0 * M_PI / panels;
  // Accumulate in extended precision: thousands of weighted samples otherwise
  // leave ~1e-13 of rounding even for constant densities.
  long double sum = density(-M_PI) + density(M_PI);
  for (int i = 1; i < panels; ++i) {
    const double theta = -M_PI + i * h;
    sum += static_cast<long double>(density(theta)) * (i % 2 == 1 ? 4.0L : 2.0L);
  }
  return static_cast<double>(sum / (3.0L * 2.0L * M_PI) * h);
}

std::function<double(double)> lorentzian_theta_density(double n_peak, double gamma_c_t0) {
  if (!(n_peak >= 0.0) || !(gamma_c_t0 > 0.0))
    throw std::invalid_argument("lorentzian_theta_density: need n_peak >= 0, gamma_c*T0 > 0");
  return [n_peak, gamma_c_t0](double theta) {
    const double x = 2.0 * theta / gamma_c_t0;
    return n_peak / (1.0 + x * x);
  };
}

SubtractionReport comb_report(const Eigen::ArrayXd& sigma, const Eigen::MatrixXcd& overlaps,
                              const Eigen::ArrayXd& per_pulse_n) {
  SubtractionReport r;
  r.probability = probability_from_modes(sigma, overlaps, per_pulse_n);
  const double mean_n = per_pulse_n.mean();
  const double total = sigma.sum();
  if (total > 0.0 && mean_n > 0.0) {
    r.p_normalized = r.probability / (total * mean_n);
    r.normalization = "P / (total efficiency * mean per-pulse photon number)";
  } else {
    r.p_normalized = r.probability;
    r.normalization = "absolute (efficiency or photon number vanishes)";
  }
  r.purity = purity_from_modes(sigma, overlaps, per_pulse_n);
  r.schmidt_K = schmidt_number(sigma);

  BasisSubtractionMatrix s;
  s.S = overlaps.adjoint() * sigma.matrix().asDiagonal() * overlaps;
  s.S = 0.5 * (s.S + s.S.adjoint()).eval();
  s.scale = total;
  r.p_s = single_mode_probabilities(s, per_pulse_n);
  r.pi_s.resize(r.p_s.size());
  for (int i = 0; i < r.p_s.size(); ++i) r.pi_s[i] = single_mode_purity(r.p_s[i]);
  r.overlaps = overlaps;
  return r;
}

TimeProfile heralded_temporal_mode(const CombSpec& comb, const Eigen::ArrayXd& pulse_coeffs,
                                   double t_click) {
  if (!(comb.pulse_period > 0.0) || !(comb.cavity_decay > 0.0) || !(comb.pulse_tau > 0.0))
    throw std::invalid_argument("heralded_temporal_mode: non-positive comb parameter");
  if (comb.samples_per_period < 8 || comb.samples_per_period % 2 != 0)
    throw std::invalid_argument("heralded_temporal_mode: samples_per_period must be even, >= 8");
  if (pulse_coeffs.size() < 1)
    throw std::invalid_argument("heralded_temporal_mode: empty pulse coefficient list");
  if (!(comb.envelope_cutoff > 0.0 && comb.envelope_cutoff < 1.0))
    throw std::invalid_argument("heralded_temporal_mode: envelope_cutoff must lie in (0, 1)");

  const double t0 = comb.pulse_period;
  // Keep pulses with e^{−γ_c|lT₀ − t_click|} ≥ cutoff around the nearest pulse to the click.
  const double reach = -std::log(comb.envelope_cutoff) / comb.cavity_decay;
  const long center = std::lround(t_click / t0);
  const long l_min = center - static_cast<long>(std::ceil(reach / t0)) - 1;
  const long l_max = center + static_cast<long>(std::ceil(reach / t0)) + 1;

  // Extend the window so each kept pulse's own shape decays inside it.
  const int max_order = static_cast<int>(pulse_coeffs.size()) - 1;
  const double shape_reach = hg_extent_requirement(max_order, 1.0) * comb.pulse_tau;
  const long pad = static_cast<long>(std::ceil(shape_reach / t0)) + 1;

  const double dt = t0 / comb.samples_per_period;
  const long i_min = (l_min - pad) * comb.samples_per_period;
  const long i_max = (l_max + pad) * comb.samples_per_period;
  const long n = i_max - i_min + 1;

  TimeProfile profile;
  profile.times.resize(n);
  profile.values = Eigen::ArrayXd::Zero(n);
  for (long i = 0; i < n; ++i) profile.times[i] = (i_min + i) * dt;

  // All pulse centers are exact samples, so every pulse sees the same offsets:
  // tabulate ψ(j·dt) once.
  const long half_table = std::lround(std::ceil(shape_reach / dt));
  Eigen::ArrayXd offsets(2 * half_table + 1);
  for (long j = -half_table; j <= half_table; ++j)
    offsets[j + half_table] = j * dt / comb.pulse_tau;
  Eigen::ArrayXd shape = Eigen::ArrayXd::Zero(offsets.size());
  for (int k = 0; k <= max_order; ++k)
    if (pulse_coeffs[k] != 0.0) shape += pulse_coeffs[k] * hermite_function(k, offsets);
  shape /= std::sqrt(comb.pulse_tau);

  for (long l = l_min; l <= l_max; ++l) {
    const double weight = std::exp(-comb.cavity_decay * std::abs(l * t0 - t_click));
    if (weight < comb.envelope_cutoff) continue;
    const long center_index = l * comb.samples_per_period - i_min;
    for (long j = -half_table; j <= half_table; ++j) {
      const long i = center_index + j;
      if (i < 0 || i >= n) continue;
      profile.values[i] += weight * shape[j + half_table];
    }
  }

  const double norm = std::sqrt(profile.values.square().sum() * dt);
  if (!(norm > 0.0))
    throw std::invalid_argument("heralded_temporal_mode: profile vanished (cutoff too aggressive)");
  profile.values /= norm;
  return profile;
}

}  // namespace photonsub
