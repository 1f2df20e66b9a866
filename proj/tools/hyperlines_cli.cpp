// hyperlines: JSON on stdin, JSON on stdout (or --json-out).
// Exit codes: 0 pass, 1 check failure, 2 usage/schema, 3 domain/feature.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "hyperlines/hyperlines.h"

namespace {

struct Options {
  std::string command;
  std::string suite = "all";
  int n = 0;
  std::uint64_t seed = 7;
  std::string metric = "g1";
  double band = 1e-7;
  std::string json_out;
  bool serial = false;
};

int report(hl_status s) {
  std::cerr << "hyperlines: " << hl_status_name(s) << ": " << hl_last_error() << "\n";
  return hl_exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Oriented geodesics of hyperbolic space: classification, geodesics, charts, verification"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension parameter n (H^{n+1}); default: from the input")
        ->check(CLI::Range(1, 7));
    sub->add_option("--json-out", o.json_out, "write the JSON result here instead of stdout");
  };

  CLI::App* classify = app.add_subcommand("classify", "causal label of every interior sample of a curve (stdin)");
  add_common(classify);
  classify->add_option("--metric", o.metric, "g1, g0 or combo:LAMBDA,MU")->capture_default_str();
  classify->add_option("--band", o.band, "relative null band")->capture_default_str()->check(CLI::Range(0.0, 1.0));

  CLI::App* geodesic = app.add_subcommand("geodesic", "sample s -> exp(sX) c_o for {\"x\",\"y\"} (stdin)");
  add_common(geodesic);

  CLI::App* convert = app.add_subcommand("convert", "point-direction, endpoint pair and minitwistor forms (stdin)");
  add_common(convert);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", o.suite, "suite name or all")->capture_default_str();
  verify->add_option("--seed", o.seed, "base seed")->capture_default_str();
  verify->add_flag("--serial", o.serial, "run checks one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const auto* sub : app.get_subcommands()) o.command = sub->get_name();

  hl_context* ctx = nullptr;
  hl_status s = hl_context_create(&ctx);
  if (s == HL_OK) s = hl_context_set_n(ctx, o.n);
  if (s == HL_OK) s = hl_context_set_seed(ctx, o.seed);
  if (s == HL_OK) s = hl_context_set_metric(ctx, o.metric.c_str());
  if (s == HL_OK) s = hl_context_set_band(ctx, o.band);
  if (s == HL_OK) s = hl_context_set_parallel(ctx, o.serial ? 0 : 1);
  if (s != HL_OK) {
    hl_context_destroy(ctx);
    return report(s);
  }

  char* out = nullptr;
  if (o.command == "verify") {
    s = hl_cmd_verify(ctx, o.suite.c_str(), &out);
  } else {
    const std::string input{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    s = hl_run(ctx, o.command.c_str(), input.c_str(), &out);
  }
  hl_context_destroy(ctx);

  if (out != nullptr) {
    if (o.json_out.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(o.json_out);
      f << out;
      if (!f) {
        hl_string_free(out);
        std::cerr << "hyperlines: cannot write " << o.json_out << "\n";
        return 2;
      }
    }
    hl_string_free(out);
  }
  if (s == HL_CHECK_FAILED) {
    std::cerr << "hyperlines: one or more checks failed\n";
    return 1;
  }
  return s == HL_OK ? 0 : report(s);
}
