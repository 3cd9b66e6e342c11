#include "photonsub/squeezed_state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "photonsub/errors.hpp"
#include "photonsub/modes.hpp"

namespace photonsub {

MultimodeSqueezedState make_state(std::vector<SpectralAmplitude> basis, Eigen::ArrayXcd xi) {
  if (basis.empty()) throw std::invalid_argument("make_state: empty mode basis");
  if (static_cast<int>(basis.size()) != xi.size())
    throw std::invalid_argument("make_state: basis and xi sizes differ");
  for (const SpectralAmplitude& mode : basis)
    if (!mode.grid.same_as(basis.front().grid))
      throw std::invalid_argument("make_state: basis modes sampled on different grids");
  if ((xi.abs() > 0.5).any())
    warn("make_state: |xi| > 0.5 strains the weak-squeezing analytics");
  return {std::move(basis), std::move(xi)};
}

Eigen::ArrayXd photon_numbers(const MultimodeSqueezedState& state,
                              PhotonNumberConvention convention) {
  const Eigen::ArrayXd r = state.xi.abs();
  if (convention == PhotonNumberConvention::weak) return r.square();
  return r.sinh().square();
}

double effective_mode_number(const Eigen::ArrayXd& photon_numbers) {
  const double s1 = photon_numbers.sum();
  const double s2 = photon_numbers.square().sum();
  if (!(s2 > 0.0)) throw std::invalid_argument("effective_mode_number: no photons in any mode");
  return s1 * s1 / s2;
}

MultimodeSqueezedState equal_hg_ensemble(int n_modes, double photons_per_mode, double tau,
                                         const FrequencyGrid& grid) {
  if (n_modes < 1) throw std::invalid_argument("equal_hg_ensemble: need at least one mode");
  if (!(photons_per_mode >= 0.0))
    throw std::invalid_argument("equal_hg_ensemble: negative photon number");
  std::vector<SpectralAmplitude> basis;
  basis.reserve(n_modes);
  for (int k = 0; k < n_modes; ++k) basis.push_back(hermite_gaussian(k, tau, grid));
  Eigen::ArrayXcd xi(n_modes);
  const double r = std::sqrt(photons_per_mode);
  for (int k = 0; k < n_modes; ++k) xi[k] = (k % 2 == 0) ? r : -r;
  return make_state(std::move(basis), std::move(xi));
}

}  // namespace photonsub
