#pragma once

// Command layer behind the C API and the CLI: JSON in, JSON out.
//
//   curve    {"h": step, "samples": [{"p": [...], "v": [...]}, ...]}
//            (samples may also be endpoint pairs {"minus": [...], "plus": [...]})
//   geodesic {"minus": [...], "plus": [...]}
//   tangent  {"base": {"p": [...], "v": [...]}, "J0": [...], "J1": [...]}

#include <cstdint>
#include <string>

#include "json.hpp"

namespace hyperlines {

using Json = nlohmann::json;

struct CommandOptions {
  int n = 0;  // 0: take it from the input (verify falls back to 2)
  std::uint64_t seed = 7;
  std::string metric = "g1";  // g1 | g0 | combo:LAMBDA,MU
  double band = 1e-7;
  bool parallel = true;
};

struct CommandResult {
  Json output;
  bool passed = true;  // false only when verify reports a failing check
};

// Labels every interior sample of a curve with the chosen metric.
CommandResult cmd_classify(const Json& input, const CommandOptions& opt);
// Samples s -> exp(sX) c_o for X = x_h + y_v given as {"x", "y", "s_max"?, "steps"?}.
CommandResult cmd_geodesic(const Json& input, const CommandOptions& opt);
// Point-direction, endpoint pair or {"minitwistor": {"v", "x"}} to all three.
CommandResult cmd_convert(const Json& input, const CommandOptions& opt);
// Input: {"suite": name} or empty (suite "all").
CommandResult cmd_verify(const Json& input, const CommandOptions& opt);

// Parses text (schema error on malformed JSON) and dispatches by name.
CommandResult run_command(const std::string& name, const std::string& input_text, const CommandOptions& opt);

// JSON emitted by the CLI: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace hyperlines
