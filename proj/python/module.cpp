// Python bindings for the photonsub library. Eigen arrays and matrices map to
// numpy; std::optional maps to None; std::function densities accept python
// callables. Struct fields that carry invariants (sorted efficiencies,
// phase-fixed modes, ...) are exposed read-only.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "photonsub/comb.hpp"
#include "photonsub/config.hpp"
#include "photonsub/errors.hpp"
#include "photonsub/fock.hpp"
#include "photonsub/grid.hpp"
#include "photonsub/kernels.hpp"
#include "photonsub/modes.hpp"
#include "photonsub/schmidt.hpp"
#include "photonsub/squeezed_state.hpp"
#include "photonsub/subtraction.hpp"
#include "photonsub/sweeps.hpp"
#include "photonsub/wigner.hpp"

namespace py = pybind11;
using namespace photonsub;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Spectral-mode analysis of single-photon subtraction from multimode "
      "squeezed light: subtraction kernels, Schmidt decompositions, conditioned-"
      "state purity and herald statistics, Wigner marginals, and squeezing combs.";

  // Library errors keep their CLI meaning: ConfigError ~ exit 2, NumericalError ~ exit 3.
  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);

  // --- grids and spectral amplitudes -------------------------------------
  py::class_<FrequencyGrid>(m, "FrequencyGrid",
                            "Uniform frequency grid (omega relative to the carrier).")
      .def_readonly("points", &FrequencyGrid::points)
      .def_readonly("omega_min", &FrequencyGrid::omega_min)
      .def_readonly("omega_max", &FrequencyGrid::omega_max)
      .def_readonly("spacing", &FrequencyGrid::spacing)
      .def("size", &FrequencyGrid::size)
      .def("same_as", &FrequencyGrid::same_as, py::arg("other"));

  m.def("make_grid", &make_grid, py::arg("extent_factor"), py::arg("n_points"),
        py::arg("scale") = 1.0,
        "Symmetric grid covering +-extent_factor*scale with n_points samples.");
  m.def("make_grid_range", &make_grid_range, py::arg("omega_min"), py::arg("omega_max"),
        py::arg("n_points"),
        "General grid over [omega_min, omega_max]; prefer make_grid for paired symmetry.");

  py::class_<SpectralAmplitude>(m, "SpectralAmplitude",
                                "A spectral mode/amplitude sampled on a grid.")
      .def(py::init([](FrequencyGrid grid, Eigen::ArrayXcd values) {
             if (grid.size() != static_cast<int>(values.size()))
               throw config_error("spectral amplitude: values length must match the grid");
             return SpectralAmplitude{std::move(grid), std::move(values)};
           }),
           py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &SpectralAmplitude::grid)
      .def_readonly("values", &SpectralAmplitude::values);

  m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"),
        "<a, b> = sum conj(a_i) b_i domega; the first argument is conjugated.");
  m.def("amplitude_norm", &amplitude_norm, py::arg("a"));
  m.def("interpolate", &interpolate, py::arg("a"), py::arg("omega"),
        "Linear interpolation of sampled values; zero outside the grid.");

  // --- modes, filters, detectors ------------------------------------------
  m.def("hermite_function", &hermite_function, py::arg("k"), py::arg("x"),
        "Normalized Hermite function psi_k(x), unit L2 norm.");
  m.def("hg_extent_requirement", &hg_extent_requirement, py::arg("k"), py::arg("tau"),
        "Minimal |omega| the grid must reach so mode k of width tau fits.");
  m.def("hermite_gaussian", &hermite_gaussian, py::arg("k"), py::arg("tau"), py::arg("grid"),
        "Hermite-Gaussian mode u_k(omega) = sqrt(tau) psi_k(tau omega), unit norm.");
  m.def("gaussian_gate", &gaussian_gate, py::arg("tau_g"), py::arg("grid"),
        "Up-conversion gate spectrum, unit norm.");
  m.def("gaussian_phasematch", &gaussian_phasematch, py::arg("omega_ph"), py::arg("grid"),
        "Phase-matching profile with peak 1.");
  m.def("phase_matching_width", &phase_matching_width, py::arg("length"), py::arg("v_s"),
        py::arg("v_c"),
        "Phase-matching width from crystal length and group velocities.");

  py::class_<FilterModel>(m, "FilterModel", "Spectral filter in front of the detector.")
      .def_static("open", &FilterModel::open)
      .def_static("gaussian", &FilterModel::gaussian, py::arg("omega_f"))
      .def_static("custom", &FilterModel::custom, py::arg("transmission"))
      .def("amplitude_on", &FilterModel::amplitude_on, py::arg("grid"))
      .def("power_on", &FilterModel::power_on, py::arg("grid"));

  py::class_<DetectorModel>(m, "DetectorModel", "Detection-time response of the herald detector.")
      .def_static("slow", &DetectorModel::slow, py::arg("efficiency") = 1.0)
      .def_static("instant", &DetectorModel::instant, py::arg("efficiency") = 1.0)
      .def_static("gaussian_jitter", &DetectorModel::gaussian_jitter, py::arg("tau_d"),
                  py::arg("efficiency") = 1.0)
      .def_readonly("tau_d", &DetectorModel::tau_d)
      .def_readonly("efficiency", &DetectorModel::efficiency)
      .def("coherence", &DetectorModel::coherence, py::arg("nu"),
           "Detector coherence Gamma(nu), Gamma(0) = 1.");

  // --- subtraction kernels -------------------------------------------------
  py::class_<ParametricKernel>(m, "ParametricKernel",
                               "First-order detection coupling R(nu, omega).")
      .def_readonly("grid", &ParametricKernel::grid)
      .def_readonly("is_diagonal", &ParametricKernel::is_diagonal)
      .def_readonly("scale", &ParametricKernel::scale)
      .def_readonly("diagonal", &ParametricKernel::diagonal)
      .def_readonly("matrix", &ParametricKernel::matrix);

  py::class_<KernelOperator>(m, "KernelOperator",
                             "Hermitian PSD subtraction kernel S(omega, omega').")
      .def_readonly("grid", &KernelOperator::grid)
      .def_readonly("is_diagonal", &KernelOperator::is_diagonal)
      .def_readonly("scale", &KernelOperator::scale)
      .def_readonly("diagonal", &KernelOperator::diagonal)
      .def_readonly("matrix", &KernelOperator::matrix)
      .def("trace", &KernelOperator::trace);

  m.def("beamsplitter_coupling", &beamsplitter_coupling, py::arg("r"), py::arg("grid"),
        "Beamsplitter tap with amplitude reflectivity r.");
  m.def("upconversion_coupling", &upconversion_coupling, py::arg("gate"), py::arg("phasematch"),
        py::arg("coupling"),
        "Sum-frequency coupling from a gate spectrum and a phase-matching profile.");
  m.def("beamsplitter_kernel_slow", &beamsplitter_kernel_slow, py::arg("r"), py::arg("filter"),
        py::arg("grid"),
        "Slow-detector beamsplitter kernel r^2 |F(omega)|^2 delta(omega - omega').");
  m.def("upconversion_kernel", &upconversion_kernel, py::arg("gate"), py::arg("phasematch"),
        py::arg("coupling"), py::arg("filter"), py::arg("grid"),
        "Slow-detector up-conversion kernel (dense, PSD).");
  m.def("time_resolved_kernel", &time_resolved_kernel, py::arg("coupling"), py::arg("filter"),
        py::arg("detector"), py::arg("t_click"),
        "Kernel for a click at t_click with the given detector response.");

  // --- Schmidt decompositions ----------------------------------------------
  py::class_<SchmidtDecomposition>(m, "SchmidtDecomposition",
                                   "Orthonormal subtraction modes with efficiencies "
                                   "(descending; sum equals the kernel trace).")
      .def_readonly("modes", &SchmidtDecomposition::modes)
      .def_readonly("efficiencies", &SchmidtDecomposition::efficiencies);

  m.def("decompose", &decompose, py::arg("kernel"), py::arg("truncation") = 1e-10,
        "Numerical eigendecomposition of a dense kernel.");
  m.def("schmidt_number",
        py::overload_cast<const Eigen::ArrayXd&>(&schmidt_number),
        py::arg("efficiencies"), "K = (sum sigma)^2 / sum sigma^2.");
  m.def("schmidt_number",
        py::overload_cast<const SchmidtDecomposition&>(&schmidt_number),
        py::arg("decomposition"));
  m.def("analytic_bs_decomposition", &analytic_bs_decomposition, py::arg("omega_f"),
        py::arg("tau_d"), py::arg("r"), py::arg("grid"), py::arg("truncation") = 1e-10,
        "Closed-form decomposition of the jittered-beamsplitter kernel, K = sqrt(1 + eps^2).");
  m.def("analytic_upconversion_decomposition", &analytic_upconversion_decomposition,
        py::arg("tau_g"), py::arg("omega_ph"), py::arg("omega_f"), py::arg("coupling"),
        py::arg("grid"), py::arg("truncation") = 1e-10,
        "Closed-form decomposition of the Gaussian up-conversion kernel.");

  // --- multimode squeezed states --------------------------------------------
  py::enum_<PhotonNumberConvention>(m, "PhotonNumberConvention")
      .value("exact", PhotonNumberConvention::exact, "n_k = sinh^2 |xi_k|")
      .value("weak", PhotonNumberConvention::weak, "n_k = |xi_k|^2");

  py::class_<MultimodeSqueezedState>(m, "MultimodeSqueezedState",
                                     "Independent squeezers xi_k in an orthonormal basis.")
      .def_readonly("basis", &MultimodeSqueezedState::basis)
      .def_readonly("xi", &MultimodeSqueezedState::xi);

  m.def("make_state", &make_state, py::arg("basis"), py::arg("xi"),
        "Validating constructor (sizes match, grids consistent).");
  m.def("photon_numbers", &photon_numbers, py::arg("state"),
        py::arg("convention") = PhotonNumberConvention::exact);
  m.def("effective_mode_number", &effective_mode_number, py::arg("photon_numbers"),
        "N = (sum n_k)^2 / sum n_k^2.");
  m.def("equal_hg_ensemble", &equal_hg_ensemble, py::arg("n_modes"), py::arg("photons_per_mode"),
        py::arg("tau"), py::arg("grid"),
        "First n_modes HG modes with equal photon number and alternating phases.");

  // --- conditioned-state statistics ------------------------------------------
  py::class_<BasisSubtractionMatrix>(m, "BasisSubtractionMatrix",
                                     "Kernel projected onto the squeezed-mode basis.")
      .def(py::init([](Eigen::MatrixXcd S, double scale) {
             if (S.rows() != S.cols())
               throw config_error("subtraction matrix: S must be square");
             return BasisSubtractionMatrix{std::move(S), scale};
           }),
           py::arg("S"), py::arg("scale") = 1.0)
      .def_readonly("S", &BasisSubtractionMatrix::S)
      .def_readonly("scale", &BasisSubtractionMatrix::scale);

  m.def("project_kernel", &project_kernel, py::arg("kernel"), py::arg("basis"),
        "S_kk' = <u_k, S u_k'> over an orthonormal basis.");
  m.def("total_probability", &total_probability, py::arg("matrix"), py::arg("photon_numbers"),
        "P = sum_k n_k S_kk.");
  m.def("multimode_purity", &multimode_purity, py::arg("matrix"), py::arg("photon_numbers"),
        "pi = sum_kk' n_k n_k' |S_kk'|^2 / P^2.");
  m.def("single_mode_probabilities", &single_mode_probabilities, py::arg("matrix"),
        py::arg("photon_numbers"), "p_s = n_s S_ss / P for every mode s.");
  m.def("single_mode_purity", &single_mode_purity, py::arg("p_s"),
        "pi_s = p_s^2 + (1 - p_s)^2.");
  m.def("mode_overlaps", &mode_overlaps, py::arg("decomposition"), py::arg("state"),
        "Overlaps c_jk between subtraction modes and the squeezed basis.");
  m.def("probability_from_modes", &probability_from_modes, py::arg("sigma"), py::arg("c"),
        py::arg("photon_numbers"));
  m.def("purity_from_modes", &purity_from_modes, py::arg("sigma"), py::arg("c"),
        py::arg("photon_numbers"));

  py::class_<HeraldReport>(m, "HeraldReport",
                           "Weak-squeezing herald analysis of L = diag(xi*) S diag(xi).")
      .def_readonly("L", &HeraldReport::L)
      .def_readonly("lambdas", &HeraldReport::lambdas)
      .def_readonly("herald_modes", &HeraldReport::herald_modes)
      .def_readonly("probability", &HeraldReport::probability)
      .def_readonly("p_f", &HeraldReport::p_f);

  m.def("herald", &herald, py::arg("matrix"), py::arg("xi"),
        "Heralded-mode mixture; p_f = lambda_0 / tr L >= max_s p_s.");

  py::class_<SubtractionReport>(m, "SubtractionReport",
                                "Summary of a subtraction configuration.")
      .def_readonly("probability", &SubtractionReport::probability)
      .def_readonly("p_normalized", &SubtractionReport::p_normalized)
      .def_readonly("normalization", &SubtractionReport::normalization)
      .def_readonly("purity", &SubtractionReport::purity)
      .def_readonly("schmidt_K", &SubtractionReport::schmidt_K)
      .def_readonly("p_s", &SubtractionReport::p_s)
      .def_readonly("pi_s", &SubtractionReport::pi_s)
      .def_readonly("overlaps", &SubtractionReport::overlaps);

  m.def("subtraction_report",
        py::overload_cast<const BasisSubtractionMatrix&, const Eigen::ArrayXd&>(
            &subtraction_report),
        py::arg("matrix"), py::arg("photon_numbers"),
        "Matrix route: everything derivable from S_kk' and n_k.");
  m.def("subtraction_report",
        py::overload_cast<const SchmidtDecomposition&, const MultimodeSqueezedState&,
                          PhotonNumberConvention>(&subtraction_report),
        py::arg("decomposition"), py::arg("state"), py::arg("convention"),
        "Mode route: adds the Schmidt number and overlaps.");

  // --- Wigner marginals -------------------------------------------------------
  py::class_<PhaseSpaceGrid>(m, "PhaseSpaceGrid",
                             "Square phase-space grid over alpha = x + iy.")
      .def_readonly("axis", &PhaseSpaceGrid::axis)
      .def_readonly("half_extent", &PhaseSpaceGrid::half_extent)
      .def_readonly("spacing", &PhaseSpaceGrid::spacing)
      .def("size", &PhaseSpaceGrid::size);

  m.def("make_phase_grid", &make_phase_grid, py::arg("half_extent"), py::arg("n"),
        "half_extent >= 4, n odd >= 101 (the origin is sampled exactly).");
  m.def("adequate_phase_grid", &adequate_phase_grid, py::arg("xi"),
        py::arg("base_extent") = 5.0, py::arg("base_points") = 201,
        "Grid adequate for states squeezed by xi.");

  py::class_<WignerField>(m, "WignerField", "Wigner samples W(x_i + i y_j) = values[i, j].")
      .def_readonly("grid", &WignerField::grid)
      .def_readonly("values", &WignerField::values);

  m.def("squeezed_coordinate", &squeezed_coordinate, py::arg("alpha"), py::arg("xi"));
  m.def("marginal_wigner", &marginal_wigner, py::arg("p"), py::arg("xi"), py::arg("grid"),
        "W = p W_s^- + (1 - p) W_s; negative at the origin iff p > 1/2.");
  m.def("fock_mixture_wigner", &fock_mixture_wigner, py::arg("p"), py::arg("grid"),
        "Wigner function of p |1><1| + (1 - p) |0><0|.");
  m.def("negative_at_origin", &negative_at_origin, py::arg("p"));
  m.def("integrate", &integrate, py::arg("field"), "Grid sum of W d^2 alpha.");

  // --- squeezing combs ----------------------------------------------------------
  py::class_<CombSpec>(m, "CombSpec", "Pulsed squeezing comb in a cavity.")
      .def(py::init([](double pulse_period, double cavity_decay, double pulse_tau,
                       int samples_per_period, double envelope_cutoff) {
             return CombSpec{pulse_period, cavity_decay, pulse_tau, samples_per_period,
                             envelope_cutoff};
           }),
           py::arg("pulse_period") = 1.0, py::arg("cavity_decay") = 1.0,
           py::arg("pulse_tau") = 0.05, py::arg("samples_per_period") = 64,
           py::arg("envelope_cutoff") = 1e-8)
      .def_readwrite("pulse_period", &CombSpec::pulse_period)
      .def_readwrite("cavity_decay", &CombSpec::cavity_decay)
      .def_readwrite("pulse_tau", &CombSpec::pulse_tau)
      .def_readwrite("samples_per_period", &CombSpec::samples_per_period)
      .def_readwrite("envelope_cutoff", &CombSpec::envelope_cutoff);

  m.def("per_pulse_photon_number", &per_pulse_photon_number, py::arg("density"),
        py::arg("panels") = 4096,
        "Average of a theta-density over [-pi, pi] (composite Simpson).");
  m.def("lorentzian_theta_density", &lorentzian_theta_density, py::arg("n_peak"),
        py::arg("gamma_c_T0"),
        "n(theta) = n_peak / (1 + (2 theta / (gamma_c T0))^2) as a callable.");
  m.def("comb_report", &comb_report, py::arg("sigma"), py::arg("overlaps"),
        py::arg("per_pulse_n"),
        "Subtraction summary for the comb from per-pulse photon numbers.");

  py::class_<TimeProfile>(m, "TimeProfile", "Real temporal profile sampled uniformly in t.")
      .def_readonly("times", &TimeProfile::times)
      .def_readonly("values", &TimeProfile::values);

  m.def("heralded_temporal_mode", &heralded_temporal_mode, py::arg("comb"),
        py::arg("pulse_coeffs"), py::arg("t_click"),
        "Pulse train heralded by a click at t_click, unit norm on the returned grid.");

  // --- brute-force Fock oracle -----------------------------------------------------
  py::class_<FockSpace>(m, "FockSpace", "Truncated M-mode Fock space (M <= 4, cutoff <= 6).")
      .def_readonly("n_modes", &FockSpace::n_modes)
      .def_readonly("cutoff", &FockSpace::cutoff)
      .def("dim", &FockSpace::dim)
      .def("stride", &FockSpace::stride, py::arg("mode"));

  m.def("make_fock_space", &make_fock_space, py::arg("n_modes"), py::arg("cutoff"));

  py::class_<FockState>(m, "FockState", "Pure state in a truncated Fock space.")
      .def_readonly("space", &FockState::space)
      .def_readonly("amplitudes", &FockState::amplitudes);

  m.def("weak_squeezed_vector", &weak_squeezed_vector, py::arg("xi"), py::arg("cutoff") = 2,
        "Normalized weak-squeezing truncation |0> + 2^{-1/2} sum xi_k |2_k>.");
  m.def("apply_lowering", &apply_lowering, py::arg("space"), py::arg("psi"), py::arg("mode"));

  py::class_<ConditionedState>(m, "ConditionedState", "State after a herald, rho normalized.")
      .def_readonly("space", &ConditionedState::space)
      .def_readonly("rho", &ConditionedState::rho)
      .def_readonly("probability", &ConditionedState::probability);

  m.def("conditioned_density", &conditioned_density, py::arg("state"), py::arg("sigma"),
        py::arg("c"), "rho^- = sum_j sigma_j s_j rho s_j^dag / P with s_j = sum_k c_jk a_k.");
  m.def("partial_trace_single", &partial_trace_single, py::arg("space"), py::arg("rho"),
        py::arg("keep"));

  py::class_<OracleMetrics>(m, "OracleMetrics",
                            "Brute-force metrics of a conditioned density matrix.")
      .def_readonly("purity", &OracleMetrics::purity)
      .def_readonly("marginal", &OracleMetrics::marginal)
      .def_readonly("p_s", &OracleMetrics::p_s)
      .def_readonly("p_f", &OracleMetrics::p_f);

  m.def("oracle_metrics", &oracle_metrics, py::arg("space"), py::arg("rho"), py::arg("s"));

  // --- CLI configs and subcommands ---------------------------------------------------
  py::class_<RunConfig>(m, "RunConfig",
                        "CLI run configuration; construct defaults or use parse_config.")
      .def(py::init<>());

  m.def("parse_config", &parse_config, py::arg("json_text"),
        "Parse JSON text (raises ConfigError on malformed JSON, unknown keys, bad types).");
  m.def("serialize_config", &serialize_config, py::arg("config"),
        "Canonical JSON form of a config.");
  m.def("config_hash", &config_hash, py::arg("config"),
        "64-bit FNV-1a of the canonical form, as 16 hex digits.");
  m.def(
      "run_subcommand",
      [](const std::string& name, const RunConfig& config) {
        py::dict out;
        for (const auto& file : run_subcommand(name, config).files)
          out[py::str(file.suffix)] = file.text;
        return out;
      },
      py::arg("name"), py::arg("config"),
      "Run a CLI subcommand in-process; returns {file-name suffix: CSV text}.");
}
