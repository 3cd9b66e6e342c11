#include "photonsub/grid.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "photonsub/errors.hpp"

namespace photonsub {

void warn(const std::string& message) { std::cerr << "warning: " << message << "\n"; }

namespace {

void check_points(int n_points) {
  if (n_points < 64) throw std::invalid_argument("FrequencyGrid: n_points must be >= 64");
}

}  // namespace

FrequencyGrid make_grid(double extent_factor, int n_points, double scale) {
  check_points(n_points);
  if (!(extent_factor > 0.0) || !(scale > 0.0))
    throw std::invalid_argument("make_grid: extent_factor and scale must be positive");
  const double extent = extent_factor * scale;
  // points[i] = h·(2i − (n−1)) so that points[n−1−i] == −points[i] bitwise.
  const double h = extent / (n_points - 1);
  FrequencyGrid grid;
  grid.points.resize(n_points);
  for (int i = 0; i < n_points; ++i) grid.points[i] = h * (2 * i - (n_points - 1));
  grid.omega_min = grid.points[0];
  grid.omega_max = grid.points[n_points - 1];
  grid.spacing = 2.0 * h;
  return grid;
}

FrequencyGrid make_grid_range(double omega_min, double omega_max, int n_points) {
  check_points(n_points);
  if (!(omega_max > omega_min))
    throw std::invalid_argument("make_grid_range: omega_max must exceed omega_min");
  FrequencyGrid grid;
  grid.points.resize(n_points);
  const double step = (omega_max - omega_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) grid.points[i] = omega_min + step * i;
  grid.omega_min = omega_min;
  grid.omega_max = omega_max;
  grid.spacing = step;
  return grid;
}

std::complex<double> inner_product(const SpectralAmplitude& a, const SpectralAmplitude& b) {
  if (!a.grid.same_as(b.grid))
    throw std::invalid_argument("inner_product: amplitudes live on different grids");
  return (a.values.conjugate() * b.values).sum() * a.grid.spacing;
}

double amplitude_norm(const SpectralAmplitude& a) {
  return std::sqrt(a.values.abs2().sum() * a.grid.spacing);
}

std::complex<double> interpolate(const SpectralAmplitude& a, double omega) {
  const auto& g = a.grid;
  if (omega <= g.omega_min || omega >= g.omega_max) {
    if (omega == g.omega_min) return a.values[0];
    if (omega == g.omega_max) return a.values[g.size() - 1];
    return 0.0;
  }
  const double pos = (omega - g.omega_min) / g.spacing;
  const int i = static_cast<int>(pos);
  const double f = pos - i;
  return (1.0 - f) * a.values[i] + f * a.values[i + 1];
}

}  // namespace photonsub
