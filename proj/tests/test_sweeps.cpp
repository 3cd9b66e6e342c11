// Subcommand-level checks: deterministic CSV output, worker-pool semantics and
// the structural/physical invariants of each rendered table.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "photonsub/config.hpp"
#include "photonsub/errors.hpp"
#include "photonsub/sweeps.hpp"

using namespace photonsub;

namespace {

/// Minimal reader for the CSV text produced by CsvTable: comments, header, rows.
struct ParsedCsv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    REQUIRE(it != header.end());
    return static_cast<int>(it - header.begin());
  }
  double value(std::size_t row, const std::string& name) const {
    return std::stod(rows[row][static_cast<std::size_t>(column(name))]);
  }
};

std::vector<std::string> split_line(const std::string& line) {
  // Test tables never quote cells, so a plain comma split is enough.
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      out.comments.push_back(line.substr(2));
    } else if (out.header.empty()) {
      out.header = split_line(line);
    } else {
      out.rows.push_back(split_line(line));
      REQUIRE(out.rows.back().size() == out.header.size());
    }
  }
  return out;
}

bool has_comment_starting(const ParsedCsv& csv, const std::string& prefix) {
  return std::any_of(csv.comments.begin(), csv.comments.end(), [&](const std::string& c) {
    return c.rfind(prefix, 0) == 0;
  });
}

}  // namespace

TEST_CASE("run_subcommand rejects unknown names") {
  const RunConfig config = parse_config("{}");
  CHECK_THROWS_AS(run_subcommand("fig1", config), config_error);
  CHECK_THROWS_AS(run_subcommand("", config), config_error);
  CHECK_THROWS_WITH_AS(run_subcommand("wiener", config), doctest::Contains("wiener"),
                       config_error);
}

TEST_CASE("parallel_for visits every index exactly once") {
  constexpr std::size_t kCount = 237;
  std::vector<std::atomic<int>> hits(kCount);
  for (auto& h : hits) h.store(0);
  parallel_for(kCount, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (std::size_t i = 0; i < kCount; ++i) CHECK(hits[i].load() == 1);

  // Zero tasks is a no-op, not an error.
  parallel_for(0, [&](std::size_t) { FAIL("body must not run"); });
}

TEST_CASE("parallel_for propagates a body exception to the caller") {
  std::atomic<int> started{0};
  CHECK_THROWS_AS(parallel_for(16,
                               [&](std::size_t i) {
                                 started.fetch_add(1);
                                 if (i == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  CHECK(started.load() >= 1);
}

TEST_CASE("fig3 output is deterministic and physically ordered") {
  const RunConfig config = parse_config(R"({
    "grid": {"points": 128},
    "state": {"mode_counts": [3, 5]},
    "sweep": {"min": 0.3, "max": 3.0, "points": 4}
  })");

  const RunOutput first = run_fig3(config);
  const RunOutput second = run_fig3(config);
  REQUIRE(first.files.size() == 1);
  CHECK(first.files[0].suffix == "");
  // Byte-identical across runs: the worker pool must not perturb row order or values.
  CHECK(first.files[0].text == second.files[0].text);

  const ParsedCsv csv = parse_csv(first.files[0].text);
  CHECK(has_comment_starting(csv, "subcommand fig3"));
  CHECK(has_comment_starting(csv, "config_hash " + config_hash(config)));
  REQUIRE(csv.header ==
          std::vector<std::string>{"omega_f_tau", "n_modes", "purity", "p_normalized",
                                   "probability", "inv_n"});
  REQUIRE(csv.rows.size() == 8);  // two ensembles × four sweep points

  for (std::size_t block = 0; block < 2; ++block) {
    const int n_modes = block == 0 ? 3 : 5;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t row = block * 4 + i;
      CHECK(csv.value(row, "n_modes") == n_modes);
      CHECK(csv.value(row, "inv_n") == doctest::Approx(1.0 / n_modes).epsilon(1e-15));
      const double purity = csv.value(row, "purity");
      CHECK(purity > 1.0 / n_modes - 1e-12);
      CHECK(purity <= 1.0 + 1e-12);
      if (i > 0) {
        // A wider filter passes more of every mode: the normalized click
        // probability must grow monotonically along the sweep.
        CHECK(csv.value(row, "p_normalized") > csv.value(row - 1, "p_normalized"));
        CHECK(csv.value(row, "omega_f_tau") > csv.value(row - 1, "omega_f_tau"));
      }
    }
  }
}

TEST_CASE("fig45 rows keep the herald fidelity above the single-mode probability") {
  const RunConfig config = parse_config(R"({
    "grid": {"points": 128},
    "state": {"mode_counts": [4]},
    "sweep": {"min": 0.2, "max": 5.0, "points": 5}
  })");

  const RunOutput out = run_fig45(config);
  REQUIRE(out.files.size() == 1);
  const ParsedCsv csv = parse_csv(out.files[0].text);
  CHECK(has_comment_starting(csv, "subcommand fig45"));
  REQUIRE(csv.header.size() == 13);  // five physics columns + eight coefficients
  CHECK(csv.header[5] == "coeff_0");
  REQUIRE(csv.rows.size() == 5);

  for (std::size_t row = 0; row < csv.rows.size(); ++row) {
    const double p_s = csv.value(row, "p_s");
    const double pi_s = csv.value(row, "pi_s");
    const double p_f = csv.value(row, "p_f");
    CHECK(p_f >= p_s - 1e-12);  // optimal herald can never lose to a fixed mode
    CHECK(p_f <= 1.0 + 1e-12);
    CHECK(pi_s == doctest::Approx(p_s * p_s + (1.0 - p_s) * (1.0 - p_s)).epsilon(1e-12));
    // Coefficients are phase-fixed real parts of a unit vector; columns past the
    // ensemble size stay empty.
    double norm = 0.0;
    for (int k = 0; k < 8; ++k) {
      const std::string& cell =
          csv.rows[row][static_cast<std::size_t>(csv.column("coeff_" + std::to_string(k)))];
      if (k < 4) {
        REQUIRE(!cell.empty());
        const double c = std::stod(cell);
        norm += c * c;
      } else {
        CHECK(cell.empty());
      }
    }
    CHECK(norm <= 1.0 + 1e-9);
    CHECK(norm > 0.5);  // four real coefficients carry the whole herald mode
  }
}

TEST_CASE("fig45 pads coefficient columns for small ensembles") {
  const RunConfig config = parse_config(R"({
    "grid": {"points": 128},
    "state": {"mode_counts": [2]},
    "sweep": {"min": 1.0, "max": 2.0, "points": 2}
  })");
  const ParsedCsv csv = parse_csv(run_fig45(config).files[0].text);
  REQUIRE(csv.rows.size() == 2);
  // Two squeezed modes produce two coefficients; the remaining cells stay empty.
  CHECK(csv.rows[0][csv.header.size() - 1].empty());
  CHECK(!csv.rows[0][static_cast<std::size_t>(csv.column("coeff_1"))].empty());
}

TEST_CASE("fig678 emits a mode table and an ensemble sweep") {
  const RunConfig config = parse_config(R"({
    "grid": {"points": 256},
    "upconversion": {"n_modes_max": 6},
    "decompose": {"max_modes": 3, "truncation": 1e-6}
  })");

  const RunOutput out = run_fig678(config);
  REQUIRE(out.files.size() == 2);
  CHECK(out.files[0].suffix == ".modes");
  CHECK(out.files[1].suffix == ".sweep");

  const ParsedCsv modes = parse_csv(out.files[0].text);
  // Truncation at 1e-6 trims a geometric tail of the same size off K = 1.5.
  const auto schmidt_comment =
      std::find_if(modes.comments.begin(), modes.comments.end(), [](const std::string& c) {
        return c.rfind("schmidt_number ", 0) == 0;
      });
  REQUIRE(schmidt_comment != modes.comments.end());
  CHECK(std::stod(schmidt_comment->substr(15)) == doctest::Approx(1.5).epsilon(1e-5));
  REQUIRE(modes.rows.size() % 256 == 0);
  CHECK(modes.rows.size() / 256 == 3);  // capped by decompose.max_modes
  // Efficiencies repeat per sample row and decrease with the mode index.
  const double eff0 = modes.value(0, "efficiency");
  const double eff1 = modes.value(256, "efficiency");
  const double eff2 = modes.value(512, "efficiency");
  CHECK(eff0 > eff1);
  CHECK(eff1 > eff2);
  CHECK(eff1 / eff0 == doctest::Approx(eff2 / eff1).epsilon(1e-9));  // geometric family

  const ParsedCsv sweep = parse_csv(out.files[1].text);
  REQUIRE(sweep.rows.size() == 6);
  CHECK(sweep.value(0, "n_modes") == 1);
  CHECK(sweep.value(0, "purity") == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t row = 1; row < sweep.rows.size(); ++row) {
    CHECK(sweep.value(row, "purity") <= sweep.value(row - 1, "purity") + 1e-12);
    CHECK(sweep.value(row, "p_f") >= sweep.value(row, "p_s") - 1e-12);
  }
  CHECK(sweep.value(5, "schmidt_k") == doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("fig9 renders the heralded temporal profile as a time series") {
  const RunConfig config = parse_config(R"({
    "comb": {"samples_per_period": 16, "envelope_cutoff": 1e-4}
  })");
  const RunOutput out = run_fig9(config);
  REQUIRE(out.files.size() == 1);
  const ParsedCsv csv = parse_csv(out.files[0].text);
  REQUIRE(csv.header == std::vector<std::string>{"t", "amplitude"});
  CHECK(has_comment_starting(csv, "adjacent_pulse_weight_ratio"));
  REQUIRE(csv.rows.size() > 16);
  for (std::size_t row = 1; row < csv.rows.size(); ++row)
    CHECK(csv.value(row, "t") > csv.value(row - 1, "t"));
}

TEST_CASE("wigner subcommand covers the full phase-space grid") {
  const RunConfig config = parse_config(R"({
    "wigner": {"p": 0.75, "points": 101, "half_extent": 4.0}
  })");
  const RunOutput out = run_wigner(config);
  REQUIRE(out.files.size() == 1);
  const ParsedCsv csv = parse_csv(out.files[0].text);
  REQUIRE(csv.header == std::vector<std::string>{"x", "y", "w"});
  CHECK(csv.rows.size() == 101u * 101u);
  CHECK(has_comment_starting(csv, "origin_value"));
  CHECK(has_comment_starting(csv, "negative_at_origin true"));
  // The origin sample sits exactly at a grid point.
  const std::size_t mid = (101 * 101 - 1) / 2;
  CHECK(csv.value(mid, "x") == 0.0);
  CHECK(csv.value(mid, "y") == 0.0);
  CHECK(csv.value(mid, "w") < 0.0);
}

TEST_CASE("decompose subcommand writes the truncated numerical family") {
  const RunConfig config = parse_config(R"({
    "grid": {"points": 128, "extent_factor": 10.0},
    "decompose": {"scheme": "beamsplitter", "max_modes": 4, "truncation": 1e-4}
  })");
  const RunOutput out = run_decompose(config);
  REQUIRE(out.files.size() == 1);
  const ParsedCsv csv = parse_csv(out.files[0].text);
  CHECK(has_comment_starting(csv, "scheme beamsplitter"));
  CHECK(has_comment_starting(csv, "schmidt_number"));
  CHECK(has_comment_starting(csv, "kernel_trace"));
  REQUIRE(csv.header ==
          std::vector<std::string>{"mode_index", "efficiency", "efficiency_fraction", "omega",
                                   "amplitude_re", "amplitude_im"});
  REQUIRE(csv.rows.size() % 128 == 0);
  const std::size_t shown = csv.rows.size() / 128;
  CHECK(shown >= 1);
  CHECK(shown <= 4);
  // Fractions over the *shown* modes never exceed one and decrease.
  double previous = 1.0;
  for (std::size_t j = 0; j < shown; ++j) {
    const double fraction = csv.value(j * 128, "efficiency_fraction");
    CHECK(fraction <= previous + 1e-15);
    previous = fraction;
  }
}
