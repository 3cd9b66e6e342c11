#pragma once

#include <Eigen/Dense>
#include <vector>

#include "photonsub/grid.hpp"

namespace photonsub {

/// Multimode squeezed vacuum: independent squeezers ξ_k = r_k e^{iθ_k} in an
/// orthonormal spectral basis u_k. Weak-squeezing analytics assume small |ξ_k|
/// (a warning is emitted above 0.5).
struct MultimodeSqueezedState {
  std::vector<SpectralAmplitude> basis;
  Eigen::ArrayXcd xi;
};

/// Validating constructor (sizes match, grids consistent).
MultimodeSqueezedState make_state(std::vector<SpectralAmplitude> basis, Eigen::ArrayXcd xi);

/// Photon-number convention: exact n_k = sinh²|ξ_k|, or the weak-squeezing
/// truncation n_k = |ξ_k|² used by the herald analytics.
enum class PhotonNumberConvention { exact, weak };

Eigen::ArrayXd photon_numbers(const MultimodeSqueezedState& state,
                              PhotonNumberConvention convention = PhotonNumberConvention::exact);

/// Effective number of squeezed modes N = (Σn_k)² / Σn_k². Throws on all-zero input.
double effective_mode_number(const Eigen::ArrayXd& photon_numbers);

/// First n_modes HG modes of width τ with equal photon number n per mode and
/// alternating squeezing phases, ξ_k = (−1)^k √n.
MultimodeSqueezedState equal_hg_ensemble(int n_modes, double photons_per_mode, double tau,
                                         const FrequencyGrid& grid);

}  // namespace photonsub
