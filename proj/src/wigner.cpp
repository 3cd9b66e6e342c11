#include "photonsub/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace photonsub {

PhaseSpaceGrid make_phase_grid(double half_extent, int n) {
  if (!(half_extent >= 4.0))
    throw std::invalid_argument("make_phase_grid: half_extent < 4 clips the vacuum Gaussian");
  if (n < 101 || n % 2 == 0)
    throw std::invalid_argument("make_phase_grid: need an odd point count >= 101");
  PhaseSpaceGrid grid;
  grid.half_extent = half_extent;
  grid.spacing = 2.0 * half_extent / (n - 1);
  grid.axis.resize(n);
  const int half = (n - 1) / 2;
  const double h = half_extent / half;
  for (int i = 0; i < n; ++i) grid.axis[i] = h * (i - half);  // exact 0 at the center
  return grid;
}

PhaseSpaceGrid adequate_phase_grid(std::complex<double> xi, double base_extent, int base_points) {
  const double stretch = std::exp(std::abs(xi));
  const double extent = std::max(4.0, base_extent * stretch);
  int n = static_cast<int>(std::ceil(base_points * stretch));
  if (n < 101) n = 101;
  if (n % 2 == 0) ++n;
  return make_phase_grid(extent, n);
}

std::complex<double> squeezed_coordinate(std::complex<double> alpha, std::complex<double> xi) {
  const double r = std::abs(xi);
  if (r == 0.0) return alpha;
  const std::complex<double> phase = xi / r;
  return alpha * std::cosh(r) - std::conj(alpha) * phase * std::sinh(r);
}

namespace {

WignerField mixture_field(double p, std::complex<double> xi, const PhaseSpaceGrid& grid) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("wigner: mixture weight must lie in [0, 1]");
  const int n = grid.size();
  WignerField field;
  field.grid = grid;
  field.values.resize(n, n);
  const double norm = 2.0 / M_PI;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::complex<double> alpha(grid.axis[i], grid.axis[j]);
      const double a2 = std::norm(squeezed_coordinate(alpha, xi));
      const double gauss = norm * std::exp(-2.0 * a2);
      field.values(i, j) = gauss * (1.0 - p + p * (4.0 * a2 - 1.0));
    }
  }
  return field;
}

}  // namespace

WignerField marginal_wigner(double p, std::complex<double> xi, const PhaseSpaceGrid& grid) {
  return mixture_field(p, xi, grid);
}

WignerField fock_mixture_wigner(double p, const PhaseSpaceGrid& grid) {
  return mixture_field(p, {0.0, 0.0}, grid);
}

bool negative_at_origin(double p) { return p > 0.5; }

double integrate(const WignerField& field) {
  return field.values.sum() * field.grid.spacing * field.grid.spacing;
}

}  // namespace photonsub
