// Acceptance run: one line per criterion, exit status 1 if any fails.
// Each criterion collects the verify checks that implement it, at every
// dimension it names, plus direct comparisons against the test oracles.
//
//   acceptance [--seed S]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperlines/sampling.hpp"
#include "hyperlines/verify.hpp"
#include "oracles.hpp"

using namespace hyperlines;

namespace {

struct Evidence {
  bool ok = true;
  std::string note;

  void add(bool pass, const std::string& what) {
    if (!pass) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

class Runner {
 public:
  explicit Runner(std::uint64_t seed) : seed_(seed) {}

  // Requires the named checks of suite at n to pass (an info status never counts).
  void require(Evidence& ev, const std::string& suite, int n, const std::vector<std::string>& names) {
    const VerifyReport& r = report(suite, n);
    for (const auto& name : names) {
      const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckRecord& c) { return c.name == name; });
      if (it == r.checks.end()) {
        ev.add(false, name + " missing at n=" + std::to_string(n));
        continue;
      }
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s n=%d: %.3g %s %.3g", name.c_str(), n, it->value, it->comparison.c_str(),
                    it->tolerance);
      ev.add(it->status == CheckStatus::Pass, buf + (it->detail.empty() ? "" : " (" + it->detail + ")"));
    }
  }

 private:
  const VerifyReport& report(const std::string& suite, int n) {
    const auto key = suite + "/" + std::to_string(n);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, run_verify(suite, n, seed_)).first;
    return it->second;
  }

  std::uint64_t seed_;
  std::map<std::string, VerifyReport> cache_;
};

// Metric closed forms against the oracle trace form, independent of the verify suite.
void oracle_metric(Evidence& ev, std::uint64_t seed) {
  Sampler s(seed);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + k % 3;
    const Vector x = s.gaussian(n), y = s.gaussian(n);
    const GTangent gt = GTangent::at_base(x, y);
    const oracle::Mat m = oracle::h_matrix(x, y);
    worst = std::max(worst, std::abs(norm_g1(gt) - oracle::trace_form(m, m)) / std::max(1.0, gt.scale()));
    worst = std::max(worst, std::abs(killing_B(h_element(x, y), h_element(x, y)) - norm_g1(gt)) / std::max(1.0, gt.scale()));
  }
  ev.add(worst <= 1e-12, "oracle trace form deviation " + std::to_string(worst));
}

// Curvature at c_o for n = 1 against the bracket formula oracle on G_o-conjugated planes.
void oracle_curvature(Evidence& ev, std::uint64_t seed) {
  Sampler s(seed);
  const SpaceConfig cfg(1);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Vector a = s.gaussian(1), b = s.gaussian(1), c = s.gaussian(1), d = s.gaussian(1);
    const Matrix g = s.isotropy_element(cfg);
    const AlgebraElement x = algebra_split(adjoint(g, h_element(a, b))).h_part;
    const AlgebraElement y = algebra_split(adjoint(g, h_element(c, d))).h_part;
    const double q = oracle::trace_form(x.mat, x.mat) * oracle::trace_form(y.mat, y.mat) -
                     std::pow(oracle::trace_form(x.mat, y.mat), 2);
    if (std::abs(q) < 1e-3) continue;
    worst = std::max(worst, std::abs(curvature_at_base(x, y) - oracle::bracket_curvature(x.mat, y.mat)));
  }
  ev.add(worst <= 1e-8, "bracket oracle deviation " + std::to_string(worst));
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
  }
  Runner run(seed);

  struct Criterion {
    int id;
    const char* title;
    std::function<void(Evidence&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "metric formulas at c_o",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3}) run.require(ev, "metrics", n, {"metrics.g1_closed_form"});
         run.require(ev, "metrics", 2, {"metrics.g0_closed_form"});
         for (int n : {1, 2, 3}) run.require(ev, "minkowski", n, {"minkowski.killing_on_h"});
         oracle_metric(ev, seed);
       }},
      {2, "invariance and split signature",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3, 6}) run.require(ev, "metrics", n, {"metrics.g1_invariance", "metrics.signature"});
         run.require(ev, "metrics", 2, {"metrics.combo_invariance"});
       }},
      {3, "invariant symmetric forms on h",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3, 6}) run.require(ev, "metrics", n, {"metrics.invariant_forms"});
       }},
      {4, "geodesics of G and periodicity",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3}) run.require(ev, "periodic", n, {"periodic.closure_sweep", "periodic.timelike"});
       }},
      {5, "standard presentation",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3}) {
           run.require(ev, "presentation", n,
                       {"presentation.fixtures_residual", "presentation.random_residual", "presentation.relift_offset"});
         }
       }},
      {6, "causal characterization",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3}) run.require(ev, "causal", n, {"causal.three_way"});
         run.require(ev, "causal", 2, {"causal.orientation_g0"});
       }},
      {7, "boundary isometry",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3}) run.require(ev, "boundary", n, {"boundary.isometry", "boundary.closed_form"});
       }},
      {8, "Kaehler structure on G_3",
       [&](Evidence& ev) { run.require(ev, "kahler", 2, {"kahler.parallel", "kahler.j0_orthogonal"}); }},
      {9, "octonionic structure on G_7",
       [&](Evidence& ev) {
         run.require(ev, "octonion", 6,
                     {"octonion.j_square", "octonion.j_orthogonal", "octonion.cross_identity",
                      "octonion.nijenhuis_nonzero"});
       }},
      {10, "de Sitter curvature (n = 1)",
       [&](Evidence& ev) {
         run.require(ev, "curvature", 1, {"curvature.constant", "curvature.value"});
         oracle_curvature(ev, seed);
       }},
      {11, "chart round trips",
       [&](Evidence& ev) {
         for (int n : {1, 2, 3}) run.require(ev, "charts", n, {"charts.psi_roundtrip", "charts.minitwistor_roundtrip"});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Evidence ev;
    try {
      c.body(ev);
    } catch (const std::exception& e) {
      ev.add(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %-34s %8.1f ms%s%s\n", c.id, ev.ok ? "PASS" : "FAIL", c.title, ms,
                ev.ok ? "" : "  ", ev.note.c_str());
    if (!ev.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
