#pragma once

#include <string>
#include <vector>

namespace photonsub {

/// JSON-backed run configuration for the CLI subcommands. Every field has a
/// default; unknown keys and type mismatches are config errors. Serialization is
/// canonical (sorted keys, shortest round-trip floats), so parse → serialize →
/// parse is the identity.

struct GridConfig {
  int points = 1024;           // ≥ 64
  double extent_factor = 8.0;  // grid covers ±extent_factor·scale
};

struct StateConfig {
  double photons_per_mode = 0.1;
  double tau = 1.0;                          // squeezed-mode width parameter
  std::vector<int> mode_counts = {10, 20, 40};  // ensemble sizes for fig3/fig45
};

struct SweepConfig {
  double min = 0.01;  // ω_f·τ range
  double max = 30.0;
  int points = 25;
  bool log = true;
};

struct BeamsplitterConfig {
  double reflectivity = 0.1;   // amplitude r (probabilities scale with r²)
  double detector_tau_d = 1.0; // jitter for the decompose subcommand
  int subtraction_mode = 0;    // s in p_s
};

struct UpconversionConfig {
  double tau_g = 1.0;
  double omega_ph = 1.5811388300841898;  // √2.5 → K = 1.5 with the matched gate
  double omega_f = 1.5811388300841898;
  double coupling = 1.0;                 // |C|
  int n_modes_max = 40;                  // N sweep upper end
};

struct CombConfig {
  double pulse_period = 1.0;
  double cavity_decay = 0.5;
  double pulse_tau = 0.05;
  int samples_per_period = 64;
  double t_click = 0.0;
  double envelope_cutoff = 1e-8;
  std::vector<double> pulse_coeffs = {1.0};
};

struct WignerConfig {
  double p = 0.75;
  double xi_mag = 0.0;
  double xi_phase = 0.0;
  double half_extent = 5.0;
  int points = 101;  // odd
};

struct DecomposeConfig {
  std::string scheme = "upconversion";  // "beamsplitter" (jittered) or "upconversion"
  int max_modes = 6;
  double truncation = 1e-10;
};

struct RunConfig {
  long long seed = 0;  // recorded in the hash; current subcommands are deterministic
  GridConfig grid;
  StateConfig state;
  SweepConfig sweep;
  BeamsplitterConfig beamsplitter;
  UpconversionConfig upconversion;
  CombConfig comb;
  WignerConfig wigner;
  DecomposeConfig decompose;
};

/// Parse JSON text (throws config_error on malformed JSON, unknown keys, bad types).
RunConfig parse_config(const std::string& json_text);

/// Canonical JSON form of a config.
std::string serialize_config(const RunConfig& config);

/// 64-bit FNV-1a of the canonical form, as 16 hex digits. Embedded in CSV headers.
std::string config_hash(const RunConfig& config);

}  // namespace photonsub
