// Links only the shared library and its C header.
#include <cstring>
#include <string>

#include "doctest.h"
#include "hyperlines/hyperlines.h"

TEST_CASE("context lifecycle and argument validation") {
  hl_context* ctx = nullptr;
  REQUIRE(hl_context_create(&ctx) == HL_OK);
  CHECK(hl_context_create(nullptr) == HL_INVALID_ARGUMENT);
  CHECK(hl_context_set_n(ctx, -1) == HL_RANGE);
  CHECK(std::strlen(hl_last_error()) > 0);
  CHECK(hl_context_set_band(ctx, -1.0) == HL_RANGE);
  CHECK(hl_context_set_metric(nullptr, "g1") == HL_INVALID_ARGUMENT);
  char* out = reinterpret_cast<char*>(1);
  CHECK(hl_cmd_convert(nullptr, "{}", &out) == HL_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  hl_context_destroy(ctx);
  hl_context_destroy(nullptr);
}

TEST_CASE("status codes map onto exit codes") {
  CHECK(hl_exit_code(HL_OK) == 0);
  CHECK(hl_exit_code(HL_CHECK_FAILED) == 1);
  CHECK(hl_exit_code(HL_SCHEMA) == 2);
  CHECK(hl_exit_code(HL_DOMAIN) == 3);
  CHECK(hl_exit_code(HL_FEATURE) == 3);
  CHECK(hl_exit_code(HL_NUMERIC) == 3);
  CHECK(std::string(hl_status_name(HL_FEATURE)) == "feature");
  CHECK(std::string(hl_version()).size() > 0);
}

TEST_CASE("commands through the C API") {
  hl_context* ctx = nullptr;
  REQUIRE(hl_context_create(&ctx) == HL_OK);
  char* out = nullptr;

  REQUIRE(hl_cmd_convert(ctx, R"({"p": [1, 0, 0], "v": [0, 1, 0]})", &out) == HL_OK);
  CHECK(std::string(out).find("\"minitwistor\"") != std::string::npos);
  hl_string_free(out);

  CHECK(hl_cmd_convert(ctx, R"({"minus": [1, 0], "plus": [1, 0]})", &out) == HL_DOMAIN);
  CHECK(out == nullptr);
  CHECK(std::string(hl_last_error()).find("coincide") != std::string::npos);

  CHECK(hl_cmd_geodesic(ctx, "not json", &out) == HL_SCHEMA);
  CHECK(hl_run(ctx, "unknown", "{}", &out) == HL_SCHEMA);

  REQUIRE(hl_context_set_n(ctx, 2) == HL_OK);
  REQUIRE(hl_cmd_verify(ctx, "charts", &out) == HL_OK);
  CHECK(std::string(out).find("\"overall\": \"pass\"") != std::string::npos);
  hl_string_free(out);
  CHECK(hl_cmd_verify(ctx, "octonion", &out) == HL_FEATURE);
  CHECK(hl_cmd_verify(ctx, "nope", &out) == HL_SCHEMA);

  REQUIRE(hl_context_set_metric(ctx, "g0") == HL_OK);
  REQUIRE(hl_context_set_n(ctx, 0) == HL_OK);
  const char* curve =
      R"({"h": 0.001, "samples": [{"p": [1, 0, 0], "v": [0, 1, 0]}, {"p": [1, 0, 0], "v": [0, 1, 0]},
          {"p": [1, 0, 0], "v": [0, 1, 0]}, {"p": [1, 0, 0], "v": [0, 1, 0]}, {"p": [1, 0, 0], "v": [0, 1, 0]}]})";
  CHECK(hl_cmd_classify(ctx, curve, &out) == HL_FEATURE);
  hl_context_destroy(ctx);
}
