#include "photonsub/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

#include "photonsub/errors.hpp"

namespace photonsub {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw config_error("config: " + path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void read(const json& j, const std::string& path, double& out) {
  if (!j.is_number()) fail(path, "expected a number");
  out = j.get<double>();
}

void read(const json& j, const std::string& path, int& out) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  out = j.get<int>();
}

void read(const json& j, const std::string& path, long long& out) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  out = j.get<long long>();
}

void read(const json& j, const std::string& path, bool& out) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  out = j.get<bool>();
}

void read(const json& j, const std::string& path, std::string& out) {
  if (!j.is_string()) fail(path, "expected a string");
  out = j.get<std::string>();
}

template <typename T>
void read(const json& j, const std::string& path, std::vector<T>& out) {
  if (!j.is_array()) fail(path, "expected an array");
  out.clear();
  int index = 0;
  for (const json& item : j) {
    T value{};
    read(item, path + "[" + std::to_string(index) + "]", value);
    out.push_back(value);
    ++index;
  }
}

/// Walks one JSON object strictly: every present key must be consumed by one of
/// the registered fields, every absent field keeps its default.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    expect_object(j_, path_);
  }

  template <typename T>
  Section& field(const char* key, T& out) {
    if (auto it = j_.find(key); it != j_.end()) read(*it, path_ + "." + key, out);
    seen_.push_back(key);
    return *this;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      bool known = false;
      for (const std::string& name : seen_)
        if (name == key) known = true;
      if (!known) fail(path_ + "." + key, "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::vector<std::string> seen_;
};

void validate(const RunConfig& c) {
  if (c.grid.points < 64) fail("grid.points", "need at least 64 samples");
  if (!(c.grid.extent_factor > 0.0)) fail("grid.extent_factor", "must be positive");
  if (!(c.state.photons_per_mode >= 0.0)) fail("state.photons_per_mode", "must be non-negative");
  if (!(c.state.tau > 0.0)) fail("state.tau", "must be positive");
  if (c.state.mode_counts.empty()) fail("state.mode_counts", "must list at least one size");
  for (int count : c.state.mode_counts)
    if (count < 1) fail("state.mode_counts", "sizes must be >= 1");
  if (!(c.sweep.min > 0.0)) fail("sweep.min", "must be positive");
  if (!(c.sweep.max > c.sweep.min)) fail("sweep.max", "must exceed sweep.min");
  if (c.sweep.points < 2) fail("sweep.points", "need at least 2 points");
  if (!(c.beamsplitter.reflectivity >= 0.0 && c.beamsplitter.reflectivity <= 1.0))
    fail("beamsplitter.reflectivity", "must lie in [0, 1]");
  if (!(c.beamsplitter.detector_tau_d >= 0.0))
    fail("beamsplitter.detector_tau_d", "must be non-negative");
  if (c.beamsplitter.subtraction_mode < 0)
    fail("beamsplitter.subtraction_mode", "must be non-negative");
  if (!(c.upconversion.tau_g > 0.0)) fail("upconversion.tau_g", "must be positive");
  if (!(c.upconversion.omega_ph > 0.0)) fail("upconversion.omega_ph", "must be positive");
  if (!(c.upconversion.omega_f > 0.0)) fail("upconversion.omega_f", "must be positive");
  if (!(c.upconversion.coupling > 0.0)) fail("upconversion.coupling", "must be positive");
  if (c.upconversion.n_modes_max < 1) fail("upconversion.n_modes_max", "must be >= 1");
  if (!(c.comb.pulse_period > 0.0)) fail("comb.pulse_period", "must be positive");
  if (!(c.comb.cavity_decay > 0.0)) fail("comb.cavity_decay", "must be positive");
  if (!(c.comb.pulse_tau > 0.0)) fail("comb.pulse_tau", "must be positive");
  if (c.comb.samples_per_period < 8 || c.comb.samples_per_period % 2 != 0)
    fail("comb.samples_per_period", "must be even and >= 8");
  if (!(c.comb.envelope_cutoff > 0.0 && c.comb.envelope_cutoff < 1.0))
    fail("comb.envelope_cutoff", "must lie in (0, 1)");
  if (c.comb.pulse_coeffs.empty()) fail("comb.pulse_coeffs", "must list at least one coefficient");
  if (!(c.wigner.p >= 0.0 && c.wigner.p <= 1.0)) fail("wigner.p", "must lie in [0, 1]");
  if (!(c.wigner.xi_mag >= 0.0)) fail("wigner.xi_mag", "must be non-negative");
  if (!(c.wigner.half_extent >= 4.0)) fail("wigner.half_extent", "must be >= 4");
  if (c.wigner.points < 101 || c.wigner.points % 2 == 0)
    fail("wigner.points", "must be odd and >= 101");
  if (c.decompose.scheme != "beamsplitter" && c.decompose.scheme != "upconversion")
    fail("decompose.scheme", "must be \"beamsplitter\" or \"upconversion\"");
  if (c.decompose.max_modes < 1) fail("decompose.max_modes", "must be >= 1");
  if (!(c.decompose.truncation > 0.0 && c.decompose.truncation < 1.0))
    fail("decompose.truncation", "must lie in (0, 1)");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw config_error(std::string("config: malformed JSON: ") + e.what());
  }
  expect_object(root, "config");

  RunConfig c;
  Section top(root, "config");
  top.field("seed", c.seed);

  if (auto it = root.find("grid"); it != root.end()) {
    Section s(*it, "grid");
    s.field("points", c.grid.points).field("extent_factor", c.grid.extent_factor);
    s.finish();
  }
  if (auto it = root.find("state"); it != root.end()) {
    Section s(*it, "state");
    s.field("photons_per_mode", c.state.photons_per_mode)
        .field("tau", c.state.tau)
        .field("mode_counts", c.state.mode_counts);
    s.finish();
  }
  if (auto it = root.find("sweep"); it != root.end()) {
    Section s(*it, "sweep");
    s.field("min", c.sweep.min)
        .field("max", c.sweep.max)
        .field("points", c.sweep.points)
        .field("log", c.sweep.log);
    s.finish();
  }
  if (auto it = root.find("beamsplitter"); it != root.end()) {
    Section s(*it, "beamsplitter");
    s.field("reflectivity", c.beamsplitter.reflectivity)
        .field("detector_tau_d", c.beamsplitter.detector_tau_d)
        .field("subtraction_mode", c.beamsplitter.subtraction_mode);
    s.finish();
  }
  if (auto it = root.find("upconversion"); it != root.end()) {
    Section s(*it, "upconversion");
    s.field("tau_g", c.upconversion.tau_g)
        .field("omega_ph", c.upconversion.omega_ph)
        .field("omega_f", c.upconversion.omega_f)
        .field("coupling", c.upconversion.coupling)
        .field("n_modes_max", c.upconversion.n_modes_max);
    s.finish();
  }
  if (auto it = root.find("comb"); it != root.end()) {
    Section s(*it, "comb");
    s.field("pulse_period", c.comb.pulse_period)
        .field("cavity_decay", c.comb.cavity_decay)
        .field("pulse_tau", c.comb.pulse_tau)
        .field("samples_per_period", c.comb.samples_per_period)
        .field("t_click", c.comb.t_click)
        .field("envelope_cutoff", c.comb.envelope_cutoff)
        .field("pulse_coeffs", c.comb.pulse_coeffs);
    s.finish();
  }
  if (auto it = root.find("wigner"); it != root.end()) {
    Section s(*it, "wigner");
    s.field("p", c.wigner.p)
        .field("xi_mag", c.wigner.xi_mag)
        .field("xi_phase", c.wigner.xi_phase)
        .field("half_extent", c.wigner.half_extent)
        .field("points", c.wigner.points);
    s.finish();
  }
  if (auto it = root.find("decompose"); it != root.end()) {
    Section s(*it, "decompose");
    s.field("scheme", c.decompose.scheme)
        .field("max_modes", c.decompose.max_modes)
        .field("truncation", c.decompose.truncation);
    s.finish();
  }

  for (const auto& [key, value] : root.items()) {
    static const char* sections[] = {"seed",         "grid", "state",  "sweep", "beamsplitter",
                                     "upconversion", "comb", "wigner", "decompose"};
    bool known = false;
    for (const char* name : sections)
      if (key == name) known = true;
    if (!known) fail("config." + key, "unknown key");
  }

  validate(c);
  return c;
}

std::string serialize_config(const RunConfig& c) {
  // nlohmann::json orders object keys lexicographically, which is the canonical
  // form hashed below; floats print in shortest round-trip form.
  json root;
  root["seed"] = c.seed;
  root["grid"] = {{"points", c.grid.points}, {"extent_factor", c.grid.extent_factor}};
  root["state"] = {{"photons_per_mode", c.state.photons_per_mode},
                   {"tau", c.state.tau},
                   {"mode_counts", c.state.mode_counts}};
  root["sweep"] = {{"min", c.sweep.min},
                   {"max", c.sweep.max},
                   {"points", c.sweep.points},
                   {"log", c.sweep.log}};
  root["beamsplitter"] = {{"reflectivity", c.beamsplitter.reflectivity},
                          {"detector_tau_d", c.beamsplitter.detector_tau_d},
                          {"subtraction_mode", c.beamsplitter.subtraction_mode}};
  root["upconversion"] = {{"tau_g", c.upconversion.tau_g},
                          {"omega_ph", c.upconversion.omega_ph},
                          {"omega_f", c.upconversion.omega_f},
                          {"coupling", c.upconversion.coupling},
                          {"n_modes_max", c.upconversion.n_modes_max}};
  root["comb"] = {{"pulse_period", c.comb.pulse_period},
                  {"cavity_decay", c.comb.cavity_decay},
                  {"pulse_tau", c.comb.pulse_tau},
                  {"samples_per_period", c.comb.samples_per_period},
                  {"t_click", c.comb.t_click},
                  {"envelope_cutoff", c.comb.envelope_cutoff},
                  {"pulse_coeffs", c.comb.pulse_coeffs}};
  root["wigner"] = {{"p", c.wigner.p},
                    {"xi_mag", c.wigner.xi_mag},
                    {"xi_phase", c.wigner.xi_phase},
                    {"half_extent", c.wigner.half_extent},
                    {"points", c.wigner.points}};
  root["decompose"] = {{"scheme", c.decompose.scheme},
                       {"max_modes", c.decompose.max_modes},
                       {"truncation", c.decompose.truncation}};
  return root.dump(2) + "\n";
}

std::string config_hash(const RunConfig& c) {
  const std::string text = serialize_config(c);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  static const char digits[] = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return hex;
}

}  // namespace photonsub
