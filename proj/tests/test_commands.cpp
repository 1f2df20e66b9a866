#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperlines/commands.hpp"
#include "hyperlines/errors.hpp"

using namespace hyperlines;

namespace {

ErrorKind kind_of(const std::string& cmd, const std::string& input, CommandOptions opt = {}) {
  try {
    run_command(cmd, input, opt);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Numeric;
}

}  // namespace

TEST_CASE("malformed input is a schema error") {
  CHECK(kind_of("convert", "{") == ErrorKind::Schema);
  CHECK(kind_of("convert", "[]") == ErrorKind::Schema);
  CHECK(kind_of("convert", R"({"p": [1, "a", 0], "v": [0, 1, 0]})") == ErrorKind::Schema);
  CHECK(kind_of("classify", R"({"h": 0.001, "samples": []})") == ErrorKind::Schema);
  CHECK(kind_of("geodesic", R"({"x": [1]})") == ErrorKind::Schema);
  CHECK(kind_of("frobnicate", "{}") == ErrorKind::Schema);
  CHECK(kind_of("verify", R"({"suite": "nope"})") == ErrorKind::Schema);
}

TEST_CASE("domain and feature errors") {
  CHECK(kind_of("convert", R"({"minus": [0, 1, 0], "plus": [0, 1, 0]})") == ErrorKind::Domain);
  CHECK(kind_of("geodesic", R"({"x": [0, 0], "y": [0, 0]})") == ErrorKind::Domain);
  CHECK(kind_of("convert", R"({"p": [2, 0, 0], "v": [0, 1, 0]})") == ErrorKind::Domain);
  CommandOptions g0;
  g0.metric = "g0";
  const std::string curve =
      R"({"h": 0.1, "samples": [{"minus": [-1, 0], "plus": [1, 0]}, {"minus": [-1, 0.1], "plus": [1, 0.1]},
          {"minus": [-1, 0.2], "plus": [1, 0.2]}, {"minus": [-1, 0.3], "plus": [1, 0.3]},
          {"minus": [-1, 0.4], "plus": [1, 0.4]}]})";
  // unnormalized ideal points are rejected before the metric is looked at
  CHECK(kind_of("classify", curve, g0) == ErrorKind::Domain);
  CommandOptions bad;
  bad.metric = "g7";
  CHECK(kind_of("classify", curve, bad) == ErrorKind::Domain);
  CommandOptions o;
  o.n = 3;
  CHECK(kind_of("verify", R"({"suite": "kahler"})", o) == ErrorKind::Feature);
}

TEST_CASE("convert produces all three representations") {
  const Json out = run_command("convert", R"({"minitwistor": {"v": [1, 0], "x": [0, 0.5]}})", {}).output;
  CHECK(out["n"] == 1);
  CHECK(out["roundtrip_error"].get<double>() < 1e-8);
  const Json back = run_command("convert", out["pair"].dump(), {}).output;
  for (int i = 0; i < 2; ++i) {
    CHECK(back["minitwistor"]["x"][i].get<double>() == doctest::Approx(out["minitwistor"]["x"][i].get<double>()));
  }
  const Json from_pd = run_command("convert", out["point_dir"].dump(), {}).output;
  CHECK(from_pd["pair"]["plus"][1].get<double>() == doctest::Approx(out["pair"]["plus"][1].get<double>()));
}

TEST_CASE("geodesic command: periodic orbit closes") {
  const Json out = run_command("geodesic", R"({"x": [0, 0], "y": [0, 1], "steps": 8})", {}).output;
  CHECK(out["periodic"] == true);
  CHECK(out["period"].get<double>() == doctest::Approx(2 * std::numbers::pi));
  CHECK(out["samples"].size() == 9);
  CHECK(out["closure"].get<double>() < 1e-8);
  const Json open = run_command("geodesic", R"({"x": [0, 1], "y": [0, 1]})", {}).output;
  CHECK(open["periodic"] == false);
  CHECK(open["period"].is_null());
}

TEST_CASE("--n must agree with the input") {
  CommandOptions o;
  o.n = 3;
  CHECK(kind_of("geodesic", R"({"x": [0, 0], "y": [0, 1]})", o) == ErrorKind::Schema);
}

TEST_CASE("verify reports are deterministic apart from timing") {
  CommandOptions o;
  o.n = 2;
  auto strip = [](Json j) {
    j.erase("timestamp");
    for (auto& c : j["checks"]) c.erase("runtime_ms");
    return j.dump();
  };
  const CommandResult a = run_command("verify", R"({"suite": "charts"})", o);
  const CommandResult b = run_command("verify", R"({"suite": "charts"})", o);
  CHECK(a.passed);
  CHECK(strip(a.output) == strip(b.output));
  CHECK(a.output["overall"] == "pass");
  o.seed = 8;
  CHECK(strip(run_command("verify", R"({"suite": "charts"})", o).output) != strip(a.output));
}
