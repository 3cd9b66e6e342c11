#include <doctest.h>

#include <cstdlib>
#include <string>

#include "photonsub/config.hpp"
#include "photonsub/csv.hpp"
#include "photonsub/errors.hpp"

using namespace photonsub;

TEST_CASE("shortest round-trip doubles survive strtod") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.5e17, -0.0, 1.2578216531412345}) {
    const std::string text = format_double(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("csv rendering is deterministic and escapes delimiters") {
  CsvTable table({"a", "b", "note"});
  table.add_comment("provenance line");
  table.add_row({static_cast<long long>(3), 0.25, std::string("plain")});
  table.add_row({std::monostate{}, -1.5, std::string("with, comma and \"quote\"")});
  const std::string once = table.to_string();
  CHECK(once == table.to_string());
  CHECK(once == "# provenance line\n"
                "a,b,note\n"
                "3,0.25,plain\n"
                ",-1.5,\"with, comma and \"\"quote\"\"\"\n");
  CHECK_THROWS_AS(table.add_row({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(CsvTable({}), std::invalid_argument);
}

TEST_CASE("config defaults parse from an empty document") {
  const RunConfig c = parse_config("{}");
  CHECK(c.grid.points == 1024);
  CHECK(c.state.mode_counts == std::vector<int>{10, 20, 40});
  CHECK(c.sweep.log);
  CHECK(c.decompose.scheme == "upconversion");
}

TEST_CASE("config parsing rejects unknown keys and bad types with paths") {
  CHECK_THROWS_AS(parse_config("not json"), config_error);
  CHECK_THROWS_AS(parse_config("[1,2]"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"grid": {"pionts": 3}})"),
                       doctest::Contains("grid.pionts"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"sweep": {"points": "many"}})"),
                       doctest::Contains("sweep.points"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"unknown_section": {}})"),
                       doctest::Contains("unknown_section"), config_error);
}

TEST_CASE("config validation enforces physical ranges") {
  CHECK_THROWS_AS(parse_config(R"({"grid": {"points": 32}})"), config_error);
  CHECK_THROWS_AS(parse_config(R"({"sweep": {"min": 2.0, "max": 1.0}})"), config_error);
  CHECK_THROWS_AS(parse_config(R"({"decompose": {"scheme": "teleport"}})"), config_error);
  CHECK_THROWS_AS(parse_config(R"({"wigner": {"points": 102}})"), config_error);
  CHECK_THROWS_AS(parse_config(R"({"beamsplitter": {"reflectivity": 1.2}})"), config_error);
  CHECK_THROWS_AS(parse_config(R"({"comb": {"samples_per_period": 9}})"), config_error);
}

TEST_CASE("parse-serialize round trip is the identity") {
  RunConfig c = parse_config(R"({
    "seed": 17,
    "sweep": {"min": 0.05, "max": 12.0, "points": 7, "log": false},
    "state": {"photons_per_mode": 0.2, "mode_counts": [3, 5]},
    "comb": {"pulse_coeffs": [0.6, 0.8]}
  })");
  const std::string text = serialize_config(c);
  const RunConfig again = parse_config(text);
  CHECK(serialize_config(again) == text);
  CHECK(again.seed == 17);
  CHECK(again.sweep.points == 7);
  CHECK_FALSE(again.sweep.log);
  CHECK(again.comb.pulse_coeffs == std::vector<double>{0.6, 0.8});
}

TEST_CASE("config hashes are stable 16-digit hex and parameter sensitive") {
  const RunConfig base = parse_config("{}");
  const std::string h = config_hash(base);
  CHECK(h.size() == 16);
  CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(config_hash(base) == h);

  RunConfig tweaked = base;
  tweaked.seed = 1;
  CHECK(config_hash(tweaked) != h);
}
