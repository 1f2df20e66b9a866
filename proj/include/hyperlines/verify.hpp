#pragma once

// Executable property suites. Every check draws its inputs from its own
// generator seeded with seed + name_hash(check name), so reports do not depend
// on execution order and checks may run concurrently.

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlines {

enum class CheckStatus { Pass, Fail, Info };
const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  double value = 0.0;      // measured quantity
  double tolerance = 0.0;  // bound it is compared against
  std::string comparison;  // "<=", ">=" or "==" (value vs tolerance)
  int n = 0;               // dimension parameter the check ran at
  double runtime_ms = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;  // sorted by name
  bool overall = false;             // every non-info check passed
  std::string timestamp;            // UTC, ISO 8601
};

// Suite names accepted by run_verify, "all" included.
std::vector<std::string> suite_names();

// Suites tied to one dimension: curvature (n=1), kahler (n=2), octonion (n=6).
// Returns 0 for suites that run at the requested n.
int suite_fixed_n(const std::string& suite);

// Runs a suite. Unknown suite: schema error. A fixed-n suite requested at
// another n: feature error ("all" runs such suites at their own n).
VerifyReport run_verify(const std::string& suite, int n, std::uint64_t seed, bool parallel = true);

}  // namespace hyperlines
