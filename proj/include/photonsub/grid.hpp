#pragma once

#include <Eigen/Dense>
#include <complex>

namespace photonsub {

/// Uniform frequency grid (ω relative to the carrier). Symmetric grids built by
/// make_grid() have exactly paired samples: points[n-1-i] == -points[i] bitwise,
/// which keeps mode parity and symmetric-filter cancellations exact.
struct FrequencyGrid {
  Eigen::ArrayXd points;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double spacing = 0.0;

  int size() const { return static_cast<int>(points.size()); }
  bool same_as(const FrequencyGrid& other) const {
    return size() == other.size() && omega_min == other.omega_min &&
           omega_max == other.omega_max;
  }
};

/// Symmetric grid covering ±extent_factor·scale with n_points samples (n ≥ 64).
FrequencyGrid make_grid(double extent_factor, int n_points, double scale = 1.0);

/// General grid over [omega_min, omega_max]; prefer make_grid() for paired symmetry.
FrequencyGrid make_grid_range(double omega_min, double omega_max, int n_points);

/// A spectral mode/amplitude sampled on a grid.
struct SpectralAmplitude {
  FrequencyGrid grid;
  Eigen::ArrayXcd values;
};

/// ⟨a, b⟩ = Σ_i conj(a_i) b_i Δω. First argument is conjugated. Throws on grid mismatch.
std::complex<double> inner_product(const SpectralAmplitude& a, const SpectralAmplitude& b);

/// √⟨a, a⟩.
double amplitude_norm(const SpectralAmplitude& a);

/// Linear interpolation of sampled values at an arbitrary frequency; zero outside the grid.
std::complex<double> interpolate(const SpectralAmplitude& a, double omega);

}  // namespace photonsub
