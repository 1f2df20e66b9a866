#include "hyperlines/hyperlines.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hyperlines/commands.hpp"
#include "hyperlines/errors.hpp"

struct hl_context {
  hyperlines::CommandOptions opt;
};

namespace {

thread_local std::string g_last_error;

hl_status fail(hl_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

hl_status status_of(hyperlines::ErrorKind k) {
  using hyperlines::ErrorKind;
  switch (k) {
    case ErrorKind::Schema: return HL_SCHEMA;
    case ErrorKind::Domain: return HL_DOMAIN;
    case ErrorKind::Feature: return HL_FEATURE;
    case ErrorKind::Dimension: return HL_DIMENSION;
    case ErrorKind::Range: return HL_RANGE;
    case ErrorKind::Numeric: return HL_NUMERIC;
  }
  return HL_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs f, translating exceptions into status codes.
template <class F>
hl_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const hyperlines::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HL_INTERNAL, e.what());
  } catch (...) {
    return fail(HL_INTERNAL, "unknown exception");
  }
}

hl_status run(hl_context* ctx, const char* command, const char* input, char** out) {
  if (out != nullptr) *out = nullptr;
  if (ctx == nullptr || command == nullptr || out == nullptr) {
    return fail(HL_INVALID_ARGUMENT, "null context, command or output pointer");
  }
  return guarded([&] {
    const auto r = hyperlines::run_command(command, input != nullptr ? input : "", ctx->opt);
    *out = copy_out(hyperlines::dump(r.output));
    if (!r.passed) return fail(HL_CHECK_FAILED, "one or more checks failed");
    return HL_OK;
  });
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "0.1.0"; }

const char* hl_status_name(hl_status status) {
  switch (status) {
    case HL_OK: return "ok";
    case HL_CHECK_FAILED: return "check_failed";
    case HL_SCHEMA: return "schema";
    case HL_DOMAIN: return "domain";
    case HL_FEATURE: return "feature";
    case HL_DIMENSION: return "dimension";
    case HL_RANGE: return "range";
    case HL_NUMERIC: return "numeric";
    case HL_INVALID_ARGUMENT: return "invalid_argument";
    case HL_INTERNAL: return "internal";
  }
  return "unknown";
}

int hl_exit_code(hl_status status) {
  switch (status) {
    case HL_OK: return 0;
    case HL_CHECK_FAILED: return 1;
    case HL_SCHEMA:
    case HL_INVALID_ARGUMENT: return 2;
    default: return 3;
  }
}

const char* hl_last_error(void) { return g_last_error.c_str(); }

hl_status hl_context_create(hl_context** out) {
  if (out == nullptr) return fail(HL_INVALID_ARGUMENT, "null output pointer");
  *out = new (std::nothrow) hl_context();
  return *out != nullptr ? HL_OK : fail(HL_INTERNAL, "out of memory");
}

void hl_context_destroy(hl_context* ctx) { delete ctx; }

hl_status hl_context_set_n(hl_context* ctx, int n) {
  if (ctx == nullptr) return fail(HL_INVALID_ARGUMENT, "null context");
  if (n < 0 || n > 7) return fail(HL_RANGE, "n must lie in [1, 7] (0: from input)");
  ctx->opt.n = n;
  return HL_OK;
}

hl_status hl_context_set_seed(hl_context* ctx, uint64_t seed) {
  if (ctx == nullptr) return fail(HL_INVALID_ARGUMENT, "null context");
  ctx->opt.seed = seed;
  return HL_OK;
}

hl_status hl_context_set_metric(hl_context* ctx, const char* metric) {
  if (ctx == nullptr || metric == nullptr) return fail(HL_INVALID_ARGUMENT, "null context or metric");
  ctx->opt.metric = metric;
  return HL_OK;
}

hl_status hl_context_set_band(hl_context* ctx, double band) {
  if (ctx == nullptr) return fail(HL_INVALID_ARGUMENT, "null context");
  if (!(band >= 0.0) || band > 1.0) return fail(HL_RANGE, "band must lie in [0, 1]");
  ctx->opt.band = band;
  return HL_OK;
}

hl_status hl_context_set_parallel(hl_context* ctx, int parallel) {
  if (ctx == nullptr) return fail(HL_INVALID_ARGUMENT, "null context");
  ctx->opt.parallel = parallel != 0;
  return HL_OK;
}

hl_status hl_cmd_classify(hl_context* ctx, const char* curve_json, char** out_json) {
  return run(ctx, "classify", curve_json, out_json);
}

hl_status hl_cmd_geodesic(hl_context* ctx, const char* input_json, char** out_json) {
  return run(ctx, "geodesic", input_json, out_json);
}

hl_status hl_cmd_convert(hl_context* ctx, const char* input_json, char** out_json) {
  return run(ctx, "convert", input_json, out_json);
}

hl_status hl_cmd_verify(hl_context* ctx, const char* suite, char** out_json) {
  const std::string input = suite == nullptr ? std::string() : hyperlines::Json{{"suite", suite}}.dump();
  return run(ctx, "verify", input.c_str(), out_json);
}

hl_status hl_run(hl_context* ctx, const char* command, const char* input_json, char** out_json) {
  return run(ctx, command, input_json, out_json);
}

void hl_string_free(char* s) { std::free(s); }

}  // extern "C"
