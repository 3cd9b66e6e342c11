#pragma once

#include <functional>
#include <string>
#include <vector>

#include "photonsub/config.hpp"

namespace photonsub {

/// One rendered CSV. `suffix` is inserted before the output-file extension when a
/// subcommand produces several files ("" for single-file subcommands).
struct NamedCsv {
  std::string suffix;
  std::string text;
};

struct RunOutput {
  std::vector<NamedCsv> files;
};

/// Filter-bandwidth sweep of conditioned-state purity and normalized probability
/// for equal HG ensembles (slow detector, diagonal beamsplitter kernel).
RunOutput run_fig3(const RunConfig& config);

/// Same sweep, reporting the targeted-mode probability p_s, the herald fidelity p_f
/// and the dominant herald-mode coefficients.
RunOutput run_fig45(const RunConfig& config);

/// Gaussian up-conversion study: subtraction-mode profiles with the efficiency
/// distribution, plus an ensemble-size sweep of π, P, p_s, p_f and K.
RunOutput run_fig678(const RunConfig& config);

/// Heralded temporal mode of a squeezing comb, sampled in time.
RunOutput run_fig9(const RunConfig& config);

/// Numerical Schmidt decomposition of the configured kernel (long-format CSV).
RunOutput run_decompose(const RunConfig& config);

/// Wigner function of the heralded single-mode marginal on a phase-space grid.
RunOutput run_wigner(const RunConfig& config);

/// Dispatch by subcommand name; throws config_error for unknown names.
RunOutput run_subcommand(const std::string& name, const RunConfig& config);

/// Sweep-point evaluation in a worker pool; results always land in input order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace photonsub
