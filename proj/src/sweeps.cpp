#include "photonsub/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <mutex>
#include <thread>
#include <vector>

#include "photonsub/comb.hpp"
#include "photonsub/csv.hpp"
#include "photonsub/errors.hpp"
#include "photonsub/kernels.hpp"
#include "photonsub/modes.hpp"
#include "photonsub/schmidt.hpp"
#include "photonsub/squeezed_state.hpp"
#include "photonsub/subtraction.hpp"
#include "photonsub/wigner.hpp"

namespace photonsub {

namespace {

constexpr int kHeraldCoeffColumns = 8;

Eigen::ArrayXd sweep_points(const SweepConfig& s) {
  Eigen::ArrayXd xs(s.points);
  if (s.log) {
    const double ratio = std::log(s.max / s.min);
    for (int i = 0; i < s.points; ++i)
      xs[i] = s.min * std::exp(ratio * i / (s.points - 1));
  } else {
    for (int i = 0; i < s.points; ++i)
      xs[i] = s.min + (s.max - s.min) * i / (s.points - 1);
  }
  return xs;
}

/// Grid sized for an equal-HG ensemble of n_modes modes of width tau: covers the
/// highest-order mode with headroom, never below the configured extent factor.
FrequencyGrid ensemble_grid(const RunConfig& c, int n_modes) {
  const double tau = c.state.tau;
  const double need = std::sqrt(2.0 * n_modes - 1.0) + 5.0;
  return make_grid(std::max(c.grid.extent_factor, need), c.grid.points, 1.0 / tau);
}

void add_provenance(CsvTable& table, const RunConfig& c, const std::string& subcommand) {
  table.add_comment("subcommand " + subcommand);
  table.add_comment("config_hash " + config_hash(c));
}

int checked_subtraction_mode(const RunConfig& c, int n_modes) {
  const int s = c.beamsplitter.subtraction_mode;
  if (s >= n_modes)
    throw config_error("config: beamsplitter.subtraction_mode: exceeds the smallest ensemble");
  return s;
}

/// Phase-fix a coefficient vector (largest-|entry| made real positive) and return
/// real parts; the schemes used here produce real vectors up to a global phase.
Eigen::ArrayXd fixed_real_coefficients(const Eigen::VectorXcd& v) {
  int pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  Eigen::VectorXcd fixed = v;
  if (std::abs(v[pivot]) > 0.0) fixed *= std::conj(v[pivot]) / std::abs(v[pivot]);
  return fixed.real().array();
}

BasisSubtractionMatrix equivalent_matrix(const SchmidtDecomposition& d,
                                         const Eigen::MatrixXcd& overlaps) {
  BasisSubtractionMatrix s;
  s.S = overlaps.adjoint() * d.efficiencies.matrix().asDiagonal() * overlaps;
  s.S = 0.5 * (s.S + s.S.adjoint()).eval();
  s.scale = d.efficiencies.sum();
  return s;
}

}  // namespace

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min({count, static_cast<std::size_t>(hw ? hw : 1),
                                        static_cast<std::size_t>(8)});
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto drain = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RunOutput run_fig3(const RunConfig& c) {
  const Eigen::ArrayXd xs = sweep_points(c.sweep);
  const std::vector<int>& counts = c.state.mode_counts;

  struct Row {
    int n_modes = 0;
    double x = 0, purity = 0, p_norm = 0, probability = 0;
  };
  std::vector<Row> rows(counts.size() * static_cast<std::size_t>(xs.size()));
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int n_modes = counts[idx / xs.size()];
    const double x = xs[static_cast<int>(idx % xs.size())];
    const FrequencyGrid grid = ensemble_grid(c, n_modes);
    const MultimodeSqueezedState state =
        equal_hg_ensemble(n_modes, c.state.photons_per_mode, c.state.tau, grid);
    const Eigen::ArrayXd n = photon_numbers(state, PhotonNumberConvention::weak);
    const KernelOperator kernel = beamsplitter_kernel_slow(
        c.beamsplitter.reflectivity, FilterModel::gaussian(x / c.state.tau), grid);
    const SubtractionReport report = subtraction_report(project_kernel(kernel, state.basis), n);
    rows[idx] = {n_modes, x, report.purity, report.p_normalized, report.probability};
  });

  CsvTable table({"omega_f_tau", "n_modes", "purity", "p_normalized", "probability", "inv_n"});
  add_provenance(table, c, "fig3");
  for (const Row& row : rows)
    table.add_row({row.x, static_cast<long long>(row.n_modes), row.purity, row.p_norm,
                   row.probability, 1.0 / row.n_modes});
  return {{{"", table.to_string()}}};
}

RunOutput run_fig45(const RunConfig& c) {
  const Eigen::ArrayXd xs = sweep_points(c.sweep);
  const std::vector<int>& counts = c.state.mode_counts;
  for (int n_modes : counts) checked_subtraction_mode(c, n_modes);

  struct Row {
    int n_modes = 0;
    double x = 0, p_s = 0, pi_s = 0, p_f = 0;
    Eigen::ArrayXd coeffs;
  };
  std::vector<Row> rows(counts.size() * static_cast<std::size_t>(xs.size()));
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int n_modes = counts[idx / xs.size()];
    const double x = xs[static_cast<int>(idx % xs.size())];
    const int s_mode = checked_subtraction_mode(c, n_modes);
    const FrequencyGrid grid = ensemble_grid(c, n_modes);
    const MultimodeSqueezedState state =
        equal_hg_ensemble(n_modes, c.state.photons_per_mode, c.state.tau, grid);
    const Eigen::ArrayXd n = photon_numbers(state, PhotonNumberConvention::weak);
    const KernelOperator kernel = beamsplitter_kernel_slow(
        c.beamsplitter.reflectivity, FilterModel::gaussian(x / c.state.tau), grid);
    const BasisSubtractionMatrix s = project_kernel(kernel, state.basis);
    const SubtractionReport report = subtraction_report(s, n);
    const HeraldReport h = herald(s, state.xi);
    rows[idx] = {n_modes,
                 x,
                 report.p_s[s_mode],
                 report.pi_s[s_mode],
                 h.p_f,
                 fixed_real_coefficients(h.herald_modes.col(0))};
  });

  std::vector<std::string> columns = {"omega_f_tau", "n_modes", "p_s", "pi_s", "p_f"};
  for (int k = 0; k < kHeraldCoeffColumns; ++k) columns.push_back("coeff_" + std::to_string(k));
  CsvTable table(columns);
  add_provenance(table, c, "fig45");
  table.add_comment("coeff_k: dominant herald mode over the squeezed basis, phase-fixed real");
  for (const Row& row : rows) {
    std::vector<CsvCell> cells = {row.x, static_cast<long long>(row.n_modes), row.p_s, row.pi_s,
                                  row.p_f};
    for (int k = 0; k < kHeraldCoeffColumns; ++k) {
      if (k < row.coeffs.size())
        cells.emplace_back(row.coeffs[k]);
      else
        cells.emplace_back();  // ragged ensembles padded with empty cells
    }
    table.add_row(std::move(cells));
  }
  return {{{"", table.to_string()}}};
}

RunOutput run_fig678(const RunConfig& c) {
  const UpconversionConfig& u = c.upconversion;
  const double w = 1.0 / std::sqrt(1.0 / (u.omega_ph * u.omega_ph) +
                                   1.0 / (u.omega_f * u.omega_f));
  const double schmidt_k = std::sqrt(1.0 + u.tau_g * u.tau_g * w * w);
  const double q = (schmidt_k - 1.0) / (schmidt_k + 1.0);
  const double tau_mode = u.tau_g / std::sqrt(schmidt_k);

  // One grid for everything: kernel supports, the subtraction-mode family down to
  // the truncation threshold, and the HG ensemble up to n_modes_max.
  int j_cut = 1;
  if (q > 0.0)
    j_cut = 1 + static_cast<int>(std::floor(std::log(c.decompose.truncation) / std::log(q)));
  const double extent =
      std::max({c.grid.extent_factor * std::max(1.0 / u.tau_g, w),
                (std::sqrt(2.0 * u.n_modes_max - 1.0) + 5.0) / c.state.tau,
                hg_extent_requirement(j_cut, tau_mode) + 1.0 / tau_mode});
  const FrequencyGrid grid = make_grid(extent, c.grid.points, 1.0);

  const SchmidtDecomposition d = analytic_upconversion_decomposition(
      u.tau_g, u.omega_ph, u.omega_f, u.coupling, grid, c.decompose.truncation);
  const double total = d.efficiencies.sum();

  CsvTable modes({"mode_index", "efficiency", "efficiency_fraction", "omega", "amplitude"});
  add_provenance(modes, c, "fig678");
  modes.add_comment("schmidt_number " + format_double(schmidt_number(d)));
  const int shown = std::min<int>(c.decompose.max_modes, static_cast<int>(d.modes.size()));
  for (int j = 0; j < shown; ++j)
    for (int i = 0; i < grid.size(); ++i)
      modes.add_row({static_cast<long long>(j), d.efficiencies[j], d.efficiencies[j] / total,
                     grid.points[i], d.modes[j].values[i].real()});

  struct Row {
    int n_modes = 0;
    double schmidt_k = 0, purity = 0, probability = 0, p_norm = 0, p_s = 0, pi_s = 0, p_f = 0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(u.n_modes_max));
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int n_modes = static_cast<int>(idx) + 1;
    const int s_mode = std::min(c.beamsplitter.subtraction_mode, n_modes - 1);
    const MultimodeSqueezedState state =
        equal_hg_ensemble(n_modes, c.state.photons_per_mode, c.state.tau, grid);
    const SubtractionReport report =
        subtraction_report(d, state, PhotonNumberConvention::weak);
    const HeraldReport h = herald(equivalent_matrix(d, report.overlaps), state.xi);
    rows[idx] = {n_modes,          *report.schmidt_K, report.purity, report.probability,
                 report.p_normalized, report.p_s[s_mode], report.pi_s[s_mode], h.p_f};
  });

  CsvTable sweep({"n_modes", "schmidt_k", "purity", "inv_k", "inv_n", "probability",
                  "p_normalized", "p_s", "pi_s", "p_f"});
  add_provenance(sweep, c, "fig678");
  for (const Row& row : rows)
    sweep.add_row({static_cast<long long>(row.n_modes), row.schmidt_k, row.purity,
                   1.0 / row.schmidt_k, 1.0 / row.n_modes, row.probability, row.p_norm, row.p_s,
                   row.pi_s, row.p_f});

  return {{{".modes", modes.to_string()}, {".sweep", sweep.to_string()}}};
}

RunOutput run_fig9(const RunConfig& c) {
  CombSpec comb;
  comb.pulse_period = c.comb.pulse_period;
  comb.cavity_decay = c.comb.cavity_decay;
  comb.pulse_tau = c.comb.pulse_tau;
  comb.samples_per_period = c.comb.samples_per_period;
  comb.envelope_cutoff = c.comb.envelope_cutoff;
  Eigen::ArrayXd coeffs(static_cast<int>(c.comb.pulse_coeffs.size()));
  for (std::size_t i = 0; i < c.comb.pulse_coeffs.size(); ++i)
    coeffs[static_cast<int>(i)] = c.comb.pulse_coeffs[i];

  const TimeProfile profile = heralded_temporal_mode(comb, coeffs, c.comb.t_click);

  CsvTable table({"t", "amplitude"});
  add_provenance(table, c, "fig9");
  table.add_comment("adjacent_pulse_weight_ratio " +
                    format_double(std::exp(-comb.cavity_decay * comb.pulse_period)));
  for (int i = 0; i < profile.times.size(); ++i)
    table.add_row({profile.times[i], profile.values[i]});
  return {{{"", table.to_string()}}};
}

RunOutput run_decompose(const RunConfig& c) {
  const double omega_f = c.upconversion.omega_f;  // filter width, shared across schemes
  KernelOperator kernel;
  double tau_mode = 0.0;
  if (c.decompose.scheme == "beamsplitter") {
    const double tau_d = c.beamsplitter.detector_tau_d;
    const double eps = tau_d * omega_f;
    tau_mode = std::pow(1.0 + eps * eps, 0.25) / omega_f;
    const double extent = std::max(c.grid.extent_factor * std::max(1.0 / tau_mode, omega_f),
                                   hg_extent_requirement(c.decompose.max_modes, tau_mode) +
                                       1.0 / tau_mode);
    const FrequencyGrid grid = make_grid(extent, c.grid.points, 1.0);
    kernel = time_resolved_kernel(beamsplitter_coupling(c.beamsplitter.reflectivity, grid),
                                  FilterModel::gaussian(omega_f),
                                  DetectorModel::gaussian_jitter(tau_d), 0.0);
  } else {
    const UpconversionConfig& u = c.upconversion;
    const double w = 1.0 / std::sqrt(1.0 / (u.omega_ph * u.omega_ph) +
                                     1.0 / (u.omega_f * u.omega_f));
    tau_mode = u.tau_g / std::sqrt(std::sqrt(1.0 + u.tau_g * u.tau_g * w * w));
    const double extent =
        std::max(c.grid.extent_factor * std::max(1.0 / u.tau_g, w),
                 hg_extent_requirement(c.decompose.max_modes, tau_mode) + 1.0 / tau_mode);
    const FrequencyGrid grid = make_grid(extent, c.grid.points, 1.0);
    kernel = upconversion_kernel(gaussian_gate(u.tau_g, grid),
                                 gaussian_phasematch(u.omega_ph, grid), u.coupling,
                                 FilterModel::gaussian(u.omega_f), grid);
  }

  const SchmidtDecomposition d = decompose(kernel, c.decompose.truncation);
  const double total = d.efficiencies.sum();
  const int shown = std::min<int>(c.decompose.max_modes, static_cast<int>(d.modes.size()));

  CsvTable table({"mode_index", "efficiency", "efficiency_fraction", "omega", "amplitude_re",
                  "amplitude_im"});
  add_provenance(table, c, "decompose");
  table.add_comment("scheme " + c.decompose.scheme);
  table.add_comment("schmidt_number " + format_double(schmidt_number(d)));
  table.add_comment("kernel_trace " + format_double(kernel.trace()));
  for (int j = 0; j < shown; ++j)
    for (int i = 0; i < d.modes[j].grid.size(); ++i)
      table.add_row({static_cast<long long>(j), d.efficiencies[j], d.efficiencies[j] / total,
                     d.modes[j].grid.points[i], d.modes[j].values[i].real(),
                     d.modes[j].values[i].imag()});
  return {{{"", table.to_string()}}};
}

RunOutput run_wigner(const RunConfig& c) {
  const std::complex<double> xi =
      std::polar(c.wigner.xi_mag, c.wigner.xi_phase);
  const PhaseSpaceGrid grid = make_phase_grid(c.wigner.half_extent, c.wigner.points);
  const WignerField field = marginal_wigner(c.wigner.p, xi, grid);

  CsvTable table({"x", "y", "w"});
  add_provenance(table, c, "wigner");
  table.add_comment("origin_value " + format_double((2.0 / M_PI) * (1.0 - 2.0 * c.wigner.p)));
  table.add_comment(std::string("negative_at_origin ") +
                    (negative_at_origin(c.wigner.p) ? "true" : "false"));
  for (int i = 0; i < grid.size(); ++i)
    for (int j = 0; j < grid.size(); ++j)
      table.add_row({grid.axis[i], grid.axis[j], field.values(i, j)});
  return {{{"", table.to_string()}}};
}

RunOutput run_subcommand(const std::string& name, const RunConfig& config) {
  if (name == "fig3") return run_fig3(config);
  if (name == "fig45") return run_fig45(config);
  if (name == "fig678") return run_fig678(config);
  if (name == "fig9") return run_fig9(config);
  if (name == "decompose") return run_decompose(config);
  if (name == "wigner") return run_wigner(config);
  throw config_error("unknown subcommand: " + name);
}

}  // namespace photonsub
