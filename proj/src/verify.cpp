#include "hyperlines/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hyperlines/almoststruct.hpp"
#include "hyperlines/sampling.hpp"

namespace hyperlines {

namespace {

struct Ctx {
  SpaceConfig cfg;
  Sampler rng;
};

struct Outcome {
  double value = 0.0;
  double tolerance = 0.0;
  std::string comparison;
  bool pass = false;
  bool info = false;
  std::string detail;
};

// NaN compares false, so a NaN measurement always fails.
Outcome at_most(double value, double tol, std::string detail = {}) {
  return {value, tol, "<=", value <= tol, false, std::move(detail)};
}

Outcome at_least(double value, double threshold, std::string detail = {}) {
  return {value, threshold, ">=", value >= threshold, false, std::move(detail)};
}

Outcome equals(double value, double expected, std::string detail = {}) {
  return {value, expected, "==", value == expected, false, std::move(detail)};
}

Outcome report_only(double value, std::string detail) { return {value, 0.0, "info", true, true, std::move(detail)}; }

struct CheckDef {
  std::string suite;
  std::string name;
  std::function<Outcome(Ctx&)> run;
  int only_n = 0;  // included only at this n
  int min_n = 1;   // included only for n >= min_n
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

// Deterministic unit vector (1, 2, ..., n)/|.| and its reversal.
Vector fixed_unit(int n, bool reversed = false) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = reversed ? n - i : i + 1;
  return v.normalized();
}

// Quadratic in the endpoint velocities so a nearly fixed endpoint does not
// shrink the scale together with the norm. Equals J0^2 + J1^2 at c_o.
double mss_scale(const BoundaryTangent& bt) {
  return 2.0 * (bt.xi_minus.squaredNorm() + bt.xi_plus.squaredNorm()) /
         (bt.at.plus.dir - bt.at.minus.dir).squaredNorm();
}

double boundary_diff(const BoundaryTangent& a, const BoundaryTangent& b) {
  return std::sqrt((a.xi_minus - b.xi_minus).squaredNorm() + (a.xi_plus - b.xi_plus).squaredNorm()) +
         geodesic_distance_proxy(a.at, b.at);
}

// ---------------------------------------------------------------- minkowski

Outcome killing_properties(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const AlgebraElement w = c.rng.algebra_element(c.cfg, c.rng.uniform(0.1, 2.0));
    const AlgebraElement x = c.rng.algebra_element(c.cfg, c.rng.uniform(0.1, 2.0));
    const AlgebraElement y = c.rng.algebra_element(c.cfg, c.rng.uniform(0.1, 2.0));
    const double s = 1.0 + x.mat.norm() * y.mat.norm() * (1.0 + w.mat.norm());
    worst = std::max(worst, std::abs(killing_B(x, y) - killing_B(y, x)) / s);
    worst = std::max(worst, std::abs(killing_B(bracket(w, x), y) + killing_B(x, bracket(w, y))) / s);
  }
  return at_most(worst, 1e-9);
}

Outcome exp_group_law(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const AlgebraElement x = c.rng.algebra_element(c.cfg, 1.0);
    const double s = c.rng.uniform(-5.0, 5.0);
    const double t = c.rng.uniform(-5.0, 5.0);
    const Matrix whole = mat_exp(x, s + t);
    worst = std::max(worst, max_abs(Matrix(mat_exp(x, s) * mat_exp(x, t) - whole)) / std::max(1.0, max_abs(whole)));
  }
  return at_most(worst, 1e-9);
}

Outcome exp_identity_component(Ctx& c) {
  const Matrix eta = minkowski_metric(c.cfg.ambient_dim());
  double worst = 0.0;
  int outside = 0;
  for (int k = 0; k < 100; ++k) {
    const Matrix g = c.rng.group_element(c.cfg);
    const double m = std::max(1.0, max_abs(g));
    worst = std::max(worst, max_abs(Matrix(g.transpose() * eta * g - eta)) / (m * m));
    if (!in_identity_component(g)) ++outside;
  }
  return at_most(worst + outside, 1e-10, std::to_string(outside) + " outside the identity component");
}

Outcome rotation_period(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Vector y = c.rng.gaussian(c.cfg.n());
    const Matrix g = mat_exp(vertical(y), 2.0 * std::numbers::pi / y.norm());
    worst = std::max(worst, max_abs(Matrix(g - Matrix::Identity(g.rows(), g.cols()))));
  }
  return at_most(worst, 1e-10);
}

Outcome split_projection(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const AlgebraElement x = c.rng.algebra_element(c.cfg, c.rng.uniform(0.1, 3.0));
    const HSplit s = algebra_split(x);
    const double scale = 1.0 + x.mat.squaredNorm();
    worst = std::max(worst, std::abs(killing_B(s.go_part, s.h_part)) / scale);
    worst = std::max(worst, max_abs(algebra_split(s.h_part).go_part.mat));
    worst = std::max(worst, max_abs(Matrix(h_element(s.x, s.y).mat - s.h_part.mat)));
    worst = std::max(worst, max_abs(Matrix(s.go_part.mat + s.h_part.mat - x.mat)));
  }
  return at_most(worst, 1e-10);
}

Outcome adz_flow_conjugation(Ctx& c) {
  const AlgebraElement z = boost_generator(c.cfg);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vector x = c.rng.gaussian(c.cfg.n());
    const Vector y = c.rng.gaussian(c.cfg.n());
    const double s = c.rng.uniform(-2.0, 2.0);
    const double t = c.rng.uniform(-2.0, 2.0);
    const HSplit direct = algebra_split(adjoint(mat_exp(z, t), h_element(x, y)));
    const auto [xt, yt] = adZ_flow(t, x, y);
    const double scale = std::max(1.0, xt.norm() + yt.norm());
    worst = std::max(worst, ((direct.x - xt).norm() + (direct.y - yt).norm()) / scale);
    const auto [xa, ya] = adZ_flow(s + t, x, y);
    const auto [xb, yb] = adZ_flow(s, xt, yt);
    worst = std::max(worst, ((xa - xb).norm() + (ya - yb).norm()) / std::max(1.0, xa.norm() + ya.norm()));
  }
  return at_most(worst, 1e-10);
}

Outcome killing_on_h(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Vector x = c.rng.gaussian(c.cfg.n(), c.rng.uniform(0.1, 3.0));
    const Vector y = c.rng.gaussian(c.cfg.n(), c.rng.uniform(0.1, 3.0));
    const AlgebraElement h = h_element(x, y);
    const double expected = x.squaredNorm() - y.squaredNorm();
    worst = std::max(worst, std::abs(killing_B(h, h) - expected) / (x.squaredNorm() + y.squaredNorm()));
  }
  return at_most(worst, 1e-12);
}

Outcome frame_contract(Ctx& c) {
  const int d = c.cfg.ambient_dim();
  const Matrix eta = minkowski_metric(d);
  double worst = 0.0;
  int outside = 0;
  for (int k = 0; k < 100; ++k) {
    const UnitTangent t = c.rng.unit_tangent(c.cfg, 3.0);
    const Matrix g = lorentz_frame(t.point.x, t.dir);
    const double m = std::max(1.0, max_abs(g));
    worst = std::max(worst, (Vector(g.col(0)) - t.point.x).norm() / m);
    worst = std::max(worst, (Vector(g.col(1)) - t.dir).norm() / m);
    worst = std::max(worst, max_abs(Matrix(g.transpose() * eta * g - eta)) / (m * m));
    if (!in_identity_component(g)) ++outside;
  }
  return at_most(worst + outside, 1e-10);
}

// --------------------------------------------------------------- hyperbolic

Outcome geodesic_on_hyperboloid(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const UnitTangent t0 = c.rng.unit_tangent(c.cfg);
    for (int i = 0; i <= 80; ++i) {
      const UnitTangent g = geodesic_point(t0, -20.0 + 0.5 * i);
      const double scale = std::max(1.0, max_abs(g.point.x) * max_abs(g.point.x));
      worst = std::max(worst, std::abs(inner(g.point.x, g.point.x) + 1.0) / scale);
      worst = std::max(worst, std::abs(inner(g.dir, g.dir) - 1.0) / scale);
      worst = std::max(worst, std::abs(inner(g.dir, g.point.x)) / scale);
    }
  }
  return at_most(worst, 1e-9, "relative to max|x|^2");
}

Outcome exp_log_roundtrip(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const HPoint p = c.rng.unit_tangent(c.cfg, 2.0).point;
    const HPoint q = c.rng.unit_tangent(c.cfg, 2.0).point;
    const HTangent w = log_map(p, q);
    const double scale = std::max(1.0, max_abs(q.x));
    worst = std::max(worst, (exp_map(w).x - q.x).norm() / scale);
    worst = std::max(worst, std::abs(w.norm() - distance(p, q)) / std::max(1.0, distance(p, q)));
  }
  return at_most(worst, 1e-9);
}

Outcome transport_isometry(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const UnitTangent t0 = c.rng.unit_tangent(c.cfg);
    const HTangent a = HTangent::projected(t0.point, spatial_to_ambient(c.rng.gaussian(c.cfg.boundary_dim())));
    const HTangent b = HTangent::projected(t0.point, spatial_to_ambient(c.rng.gaussian(c.cfg.boundary_dim())));
    const double t = c.rng.uniform(-3.0, 3.0);
    const HTangent pa = parallel_transport(t0, t, a);
    const HTangent pb = parallel_transport(t0, t, b);
    const double scale = std::max(1.0, std::abs(inner(a.vec, a.vec)) + std::abs(inner(b.vec, b.vec)));
    worst = std::max(worst, std::abs(inner(pa.vec, pb.vec) - inner(a.vec, b.vec)) / scale);
    worst = std::max(worst, std::abs(inner(pa.vec, pa.base.x)) / (scale * std::max(1.0, max_abs(pa.base.x))));
  }
  return at_most(worst, 1e-9);
}

Outcome jacobi_equation(Ctx& c) {
  const double h = 1e-3;
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const UnitTangent t0 = c.rng.unit_tangent(c.cfg);
    auto orth = [&] {
      Vector v = spatial_to_ambient(c.rng.gaussian(c.cfg.boundary_dim()));
      v += inner(v, t0.point.x) * t0.point.x;
      v -= inner(v, t0.dir) * t0.dir;
      return HTangent{t0.point, v};
    };
    const HTangent j0 = orth();
    const HTangent j1 = orth();
    const double t = c.rng.uniform(-2.0, 2.0);
    const JacobiState mid = jacobi_eval(t0, j0, j1, t);
    const Vector plus = jacobi_eval(t0, j0, j1, t + h).value.vec;
    const Vector minus = jacobi_eval(t0, j0, j1, t - h).value.vec;
    const Vector& p = mid.value.base.x;
    Vector acc = (plus - 2.0 * mid.value.vec + minus) / (h * h);
    acc += inner(acc, p) * p;
    Vector vel = (plus - minus) / (2.0 * h);
    vel += inner(vel, p) * p;
    const double scale = std::max(1.0, mid.value.vec.norm() + mid.derivative.vec.norm());
    worst = std::max(worst, (acc - mid.value.vec).norm() / scale);
    worst = std::max(worst, (vel - mid.derivative.vec).norm() / scale);
  }
  return at_most(worst, 1e-6, "D^2 J = J and D J = J' by finite differences");
}

Outcome endpoints_equivariant(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const UnitTangent t0 = c.rng.unit_tangent(c.cfg);
    const Matrix g = c.rng.group_element(c.cfg);
    const auto [a_minus, a_plus] = ideal_endpoints(UnitTangent::normalized(g * t0.point.x, g * t0.dir));
    const auto [b_minus, b_plus] = ideal_endpoints(t0);
    worst = std::max(worst, (a_minus.dir - mobius_action(g, b_minus).dir).norm());
    worst = std::max(worst, (a_plus.dir - mobius_action(g, b_plus).dir).norm());
  }
  return at_most(worst, 1e-9);
}

// ------------------------------------------------------------------ metrics

Outcome g1_closed_form(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vector x = c.rng.gaussian(c.cfg.n(), c.rng.uniform(0.1, 3.0));
    const Vector y = c.rng.gaussian(c.cfg.n(), c.rng.uniform(0.1, 3.0));
    const double expected = x.squaredNorm() - y.squaredNorm();
    const double scale = x.squaredNorm() + y.squaredNorm();
    worst = std::max(worst, std::abs(norm_g1(GTangent::at_base(x, y)) - expected) / scale);
    const AlgebraElement h = h_element(x, y);
    worst = std::max(worst, std::abs(killing_B(h, h) - expected) / scale);
  }
  return at_most(worst, 1e-12);
}

Outcome g0_closed_form(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vector x = c.rng.gaussian(2, c.rng.uniform(0.1, 3.0));
    const Vector y = c.rng.gaussian(2, c.rng.uniform(0.1, 3.0));
    const double expected = -x(1) * y(0) + x(0) * y(1);  // <ix, y>, i(a, b) = (-b, a)
    const double scale = x.squaredNorm() + y.squaredNorm();
    worst = std::max(worst, std::abs(norm_g0(GTangent::at_base(x, y)) - expected) / scale);
  }
  return at_most(worst, 1e-12);
}

Outcome metric_invariance(Ctx& c, bool combo) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const GTangent gt = c.rng.gtangent(c.cfg);
    const Matrix g = c.rng.group_element(c.cfg);
    const GTangent moved = push_forward(g, gt);
    double before = 0.0;
    double after = 0.0;
    if (combo) {
      const double lambda = c.rng.uniform(-2.0, 2.0);
      const double mu = c.rng.uniform(-2.0, 2.0);
      before = norm_combo(gt, lambda, mu);
      after = norm_combo(moved, lambda, mu);
    } else {
      before = norm_g1(gt);
      after = norm_g1(moved);
    }
    worst = std::max(worst, std::abs(after - before) / gt.scale());
  }
  return at_most(worst, 1e-8, "relative to |J0|^2 + |J1|^2");
}

Outcome signature(Ctx& c) {
  const int n = c.cfg.n();
  std::vector<MetricChoice> metrics{MetricChoice::g1()};
  if (n == 2) {
    metrics.push_back(MetricChoice::g0());
    metrics.push_back(MetricChoice::combo(c.rng.uniform(-2.0, 2.0), c.rng.uniform(-2.0, 2.0)));
  }
  int mismatch = 0;
  std::string detail;
  for (const auto& m : metrics) {
    const Eigen::SelfAdjointEigenSolver<Matrix> es(gram_at_base(c.cfg, m));
    int pos = 0;
    int neg = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      const double ev = es.eigenvalues()(i);
      if (ev > 1e-9) ++pos;
      if (ev < -1e-9) ++neg;
    }
    mismatch += std::abs(pos - n) + std::abs(neg - n);
    detail += "(" + std::to_string(pos) + "," + std::to_string(neg) + ") ";
  }
  return equals(mismatch, 0.0, "signatures " + detail);
}

Outcome invariant_forms(Ctx& c) {
  const InvariantFormDemo demo = invariant_form_dimension(c.cfg, c.rng.engine()());
  const int expected = c.cfg.n() == 2 ? 2 : 1;
  std::string detail = "expected " + std::to_string(expected) + "; smallest singular values";
  for (std::size_t i = 0; i < std::min<std::size_t>(4, demo.singular_values.size()); ++i) {
    detail += " " + fmt(demo.singular_values[i]);
  }
  return equals(demo.dimension, expected, detail);
}

// ----------------------------------------------------------------- periodic

struct SweepCase {
  double lambda;
  double ylen;
};

std::vector<SweepCase> sweep_cases(Ctx& c) {
  std::vector<SweepCase> cases;
  // Periodic points approach the frontier down to 1 - 1e-4; closer than that
  // the closure is not resolvable in double precision (see near_frontier).
  const double frontier[] = {0.0,          0.5, 1.0 - 1e-2,   1.0 - 1e-3, 1.0 - 1e-4, 1.0 - 0.5e-9,
                             1.0,          1.0 + 0.5e-9, 1.0 + 1e-6, 1.5};
  for (double l : frontier) {
    cases.push_back({l, c.rng.uniform(0.3, 2.0)});
    if (l != 0.0) cases.push_back({-l, c.rng.uniform(0.3, 2.0)});
  }
  while (cases.size() < 200) cases.push_back({c.rng.uniform(-1.6, 1.6), c.rng.uniform(0.3, 2.0)});
  return cases;
}

Outcome closure_sweep(Ctx& c) {
  const OrientedGeodesic base = OrientedGeodesic::base(c.cfg);
  int mismatches = 0;
  int periodic = 0;
  double worst_closure = 0.0;
  for (const SweepCase& sc : sweep_cases(c)) {
    const Vector y = c.rng.unit_vector(c.cfg.n()) * sc.ylen;
    const AlgebraElement x = h_element(sc.lambda * y, y);
    const PeriodicVerdict v = classify_periodic(x);
    if (v.periodic) {
      ++periodic;
      const double closure = geodesic_distance_proxy(geodesic_in_G(x, v.period), base);
      const double half = geodesic_distance_proxy(geodesic_in_G(x, v.period / 2), base);
      worst_closure = std::max(worst_closure, closure);
      if (!(closure <= 1e-8 && half > 1e-3)) ++mismatches;
    } else {
      double nearest = 1e300;
      for (int i = 0; i <= 400; ++i) {
        // Hyperbolic orbits collapse onto one ideal point; stop before the pair degenerates.
        const double s = (0.5 + 11.5 * i / 400.0) / sc.ylen;
        nearest = std::min(nearest, geodesic_distance_proxy(geodesic_in_G(x, s), base));
      }
      if (!(nearest > 1e-3)) ++mismatches;
    }
  }
  return equals(mismatches, 0.0,
                std::to_string(periodic) + " periodic of 200; worst closure " + fmt(worst_closure));
}

Outcome near_frontier_closure(Ctx& c) {
  const OrientedGeodesic base = OrientedGeodesic::base(c.cfg);
  const Vector y = fixed_unit(c.cfg.n());
  std::string detail = "closure at the predicted period for 1 - lambda =";
  double worst = 0.0;
  for (double off : {1e-5, 1e-6, 1e-7}) {
    const AlgebraElement x = h_element((1.0 - off) * y, y);
    const double closure = geodesic_distance_proxy(geodesic_in_G(x, classify_periodic(x).period), base);
    worst = std::max(worst, closure);
    detail += " " + fmt(off) + ": " + fmt(closure) + ";";
  }
  return report_only(worst, detail);
}

Outcome nonparallel_open(Ctx& c) {
  const OrientedGeodesic base = OrientedGeodesic::base(c.cfg);
  int mismatches = 0;
  for (int k = 0; k < 20; ++k) {
    const Vector x = c.rng.gaussian(c.cfg.n());
    const Vector y = c.rng.gaussian(c.cfg.n());
    const AlgebraElement h = h_element(x, y);
    if (classify_periodic(h).periodic) {
      ++mismatches;
      continue;
    }
    const double speed = std::sqrt(x.squaredNorm() + y.squaredNorm());
    double nearest = 1e300;
    for (int i = 0; i <= 200; ++i) {
      nearest = std::min(nearest, geodesic_distance_proxy(geodesic_in_G(h, (0.5 + 11.5 * i / 200.0) / speed), base));
    }
    if (!(nearest > 1e-3)) ++mismatches;
  }
  return equals(mismatches, 0.0);
}

Outcome periodic_timelike(Ctx& c) {
  int violations = 0;
  for (int k = 0; k < 100; ++k) {
    const Vector y = c.rng.gaussian(c.cfg.n());
    const Vector x = c.rng.uniform(-0.99, 0.99) * y;
    const AlgebraElement h = h_element(x, y);
    if (!classify_periodic(h).periodic) {
      ++violations;
      continue;
    }
    const GTangent v0 = GTangent::at_base(x, y);
    for (double s : {0.0, 0.7, 2.3}) {
      const GTangent v = push_forward(group_exp(h, s), v0);
      if (classify_norm(norm_g1(v), v.scale()) != CausalType::Timelike) ++violations;
    }
  }
  return equals(violations, 0.0);
}

// ---------------------------------------------------------------- curvature

Outcome curvature_constant(Ctx& c) {
  const AlgebraElement x0 = h_element(c.rng.gaussian(c.cfg.n()), c.rng.gaussian(c.cfg.n()));
  const AlgebraElement y0 = h_element(c.rng.gaussian(c.cfg.n()), c.rng.gaussian(c.cfg.n()));
  const double k0 = curvature_at_base(x0, y0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Matrix g = c.rng.isotropy_element(c.cfg);
    const AlgebraElement x = algebra_split(adjoint(g, x0)).h_part;
    const AlgebraElement y = algebra_split(adjoint(g, y0)).h_part;
    worst = std::max(worst, std::abs(curvature_at_base(x, y) - k0));
  }
  return at_most(worst, 1e-8, "K = " + fmt(k0));
}

Outcome curvature_value(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const AlgebraElement x = h_element(c.rng.gaussian(1), c.rng.gaussian(1));
    const AlgebraElement y = h_element(c.rng.gaussian(1), c.rng.gaussian(1));
    worst = std::max(worst, std::abs(curvature_at_base(x, y) + 1.0));
  }
  return at_most(worst, 1e-8, "|K + 1|, K relative to g1");
}

// ------------------------------------------------------------- presentation

const Grid kFixtureGrid{1e-3, 41};
const Grid kRandomGrid{2.5e-4, 41};

struct NamedCurve {
  std::string name;
  CurveInG curve;
  const char* expected_g1;  // nullptr when no fixed label is expected
};

std::vector<NamedCurve> fixture_curves(const SpaceConfig& cfg) {
  const Vector u = fixed_unit(cfg.n());
  const Vector w = fixed_unit(cfg.n(), true);
  std::vector<NamedCurve> out;
  out.push_back({"rotation", rotation_family(u, kFixtureGrid), "Timelike"});
  out.push_back({"relifted_rotation", relifted_rotation_family(u, kFixtureGrid), "Timelike"});
  out.push_back({"translation", translation_family(u, kFixtureGrid), "Spacelike"});
  out.push_back({"null_orbit", null_family(u, kFixtureGrid), "Null"});
  out.push_back({"h_orbit", h_family(0.5 * u, w, kFixtureGrid), nullptr});
  return out;
}

StandardPresentation present(const CurveInG& c) {
  const std::size_t mid = c.size() / 2;
  return standard_presentation(c, mid, c.lift(mid).point);
}

Outcome fixtures_residual(Ctx& c) {
  double worst = 0.0;
  for (const auto& f : fixture_curves(c.cfg)) worst = std::max(worst, presentation_residual(present(f.curve)));
  return at_most(worst, 1e-7, "h = 1e-3");
}

Outcome random_residual(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) worst = std::max(worst, presentation_residual(present(random_curve(c.rng, c.cfg, kRandomGrid))));
  return at_most(worst, 1e-7, "h = 2.5e-4");
}

Outcome relift_offset(Ctx& c) {
  const StandardPresentation sp = present(relifted_rotation_family(fixed_unit(c.cfg.n()), kFixtureGrid));
  double worst = 0.0;
  for (std::size_t i = 0; i < sp.size(); ++i) worst = std::max(worst, std::abs(sp.offsets[i] + std::sin(kFixtureGrid.t(i))));
  return at_most(worst, 1e-6, "|f(t) + sin t|");
}

Outcome zero_offsets(Ctx& c) {
  const Vector u = fixed_unit(c.cfg.n());
  double worst = 0.0;
  for (const CurveInG& curve : {rotation_family(u, kFixtureGrid), translation_family(u, kFixtureGrid)}) {
    for (double f : present(curve).offsets) worst = std::max(worst, std::abs(f));
  }
  return at_most(worst, 1e-9);
}

Outcome presentation_existence(Ctx& c) {
  int failures = 0;
  for (int k = 0; k < 20; ++k) {
    const CurveInG curve = random_curve(c.rng, c.cfg, kRandomGrid);
    const auto origin = static_cast<std::size_t>(c.rng.uniform(0.0, static_cast<double>(curve.size()) - 1e-9));
    const HPoint p = geodesic_point(curve.lift(origin), c.rng.uniform(-1.0, 1.0)).point;
    try {
      const StandardPresentation sp = standard_presentation(curve, origin, p);
      if (distance(sp.directions[origin].point, p) > 1e-8 || !(presentation_residual(sp) <= 1e-7)) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return equals(failures, 0.0);
}

// ------------------------------------------------------------------- causal

struct CausalTally {
  int samples = 0;
  int rate_vs_norm = 0;
  int jacobi_vs_boundary = 0;
  int orientation_vs_g0 = 0;
};

inline constexpr double kFdBand = 1e-4;

void tally_curve(const CurveInG& curve, bool with_g0, CausalTally& t) {
  const StandardPresentation sp = present(curve);
  for (std::size_t i = 1; i + 1 < sp.size(); ++i) {
    const GTangent gt = presentation_tangent(sp, i);
    const BoundaryTangent vb = velocity_boundary(curve, i);
    ++t.samples;
    if (causal_classify_g1(sp, i) != classify_norm(norm_g1(gt), gt.scale())) ++t.rate_vs_norm;
    if (classify_norm(norm_g1(gt), gt.scale(), kFdBand) != classify_norm(norm_mss(vb), mss_scale(vb), kFdBand)) {
      ++t.jacobi_vs_boundary;
    }
    if (with_g0 && causal_classify_g0(sp, i) != classify_norm(norm_g0(gt), gt.scale())) ++t.orientation_vs_g0;
  }
}

CausalTally causal_tally(Ctx& c, bool with_g0) {
  CausalTally t;
  for (const auto& f : fixture_curves(c.cfg)) tally_curve(f.curve, with_g0, t);
  for (int k = 0; k < 50; ++k) tally_curve(random_curve(c.rng, c.cfg, kRandomGrid), with_g0, t);
  return t;
}

Outcome three_way(Ctx& c) {
  const CausalTally t = causal_tally(c, false);
  return equals(t.rate_vs_norm + t.jacobi_vs_boundary, 0.0,
                std::to_string(t.samples) + " samples; rate/norm " + std::to_string(t.rate_vs_norm) +
                    ", jacobi/boundary " + std::to_string(t.jacobi_vs_boundary));
}

Outcome orientation_g0(Ctx& c) {
  const CausalTally t = causal_tally(c, true);
  int examples = 0;
  const Vector e1 = Vector::Unit(2, 0);
  const Vector e2 = Vector::Unit(2, 1);
  const StandardPresentation pos = present(h_family(e1, e2, kFixtureGrid));
  const StandardPresentation neg = present(h_family(e1, -e2, kFixtureGrid));
  const StandardPresentation rot = present(rotation_family(e2, kFixtureGrid));
  if (causal_classify_g0(pos, pos.size() / 2) != CausalType::Spacelike) ++examples;
  if (causal_classify_g0(neg, neg.size() / 2) != CausalType::Timelike) ++examples;
  if (causal_classify_g0(rot, rot.size() / 2) != CausalType::Null) ++examples;
  return equals(t.orientation_vs_g0 + examples, 0.0,
                std::to_string(t.samples) + " samples; " + std::to_string(examples) + " labelled examples off");
}

Outcome fixture_labels(Ctx& c) {
  int wrong = 0;
  for (const auto& f : fixture_curves(c.cfg)) {
    if (f.expected_g1 == nullptr) continue;
    const StandardPresentation sp = present(f.curve);
    for (std::size_t i = 1; i + 1 < sp.size(); ++i) {
      if (std::string(to_string(causal_classify_g1(sp, i))) != f.expected_g1) ++wrong;
    }
  }
  return equals(wrong, 0.0);
}

Outcome reparametrization(Ctx& c) {
  int wrong = 0;
  for (int k = 0; k < 20; ++k) {
    const AlgebraElement a0 = c.rng.algebra_element(c.cfg, c.rng.uniform(0.0, 1.5));
    const AlgebraElement a1 = c.rng.algebra_element(c.cfg, c.rng.uniform(0.2, 2.0));
    const double a = c.rng.uniform(-0.5, 0.5);
    const double b = c.rng.uniform(0.5, 2.0);
    auto path = [&](double t) { return mat_exp(a0 + a1 * t, 1.0); };
    const CurveInG plain = curve_from_path(path, kRandomGrid);
    const CurveInG warped = curve_from_path([&](double t) { return path(b * t + a * t * t); }, kRandomGrid);
    const StandardPresentation sp = present(plain);
    const StandardPresentation sw = present(warped);
    const std::size_t mid = sp.size() / 2;
    if (causal_classify_g1(sp, mid) != causal_classify_g1(sw, mid)) ++wrong;
    if (c.cfg.n() == 2 && causal_classify_g0(sp, mid) != causal_classify_g0(sw, mid)) ++wrong;
  }
  return equals(wrong, 0.0);
}

// ----------------------------------------------------------------- boundary

Outcome boundary_isometry(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const GTangent gt = c.rng.gtangent(c.cfg);
    worst = std::max(worst, std::abs(norm_mss(jacobi_to_boundary(gt)) - norm_g1(gt)) / gt.scale());
  }
  return at_most(worst, 1e-8, "relative to |J0|^2 + |J1|^2");
}

Outcome boundary_closed_form(Ctx& c) {
  const int n = c.cfg.n();
  double worst_fd = 0.0;
  double worst_map = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Vector a = c.rng.gaussian(n);  // J(0)
    const Vector b = c.rng.gaussian(n);  // J'(0)
    Vector minus = Vector::Zero(n + 1);
    Vector plus = Vector::Zero(n + 1);
    minus.tail(n) = a - b;
    plus.tail(n) = a + b;
    // h coordinates (a, -b) realize the Jacobi data (a, b).
    const CurveInG curve = h_family(a, -b, kFixtureGrid);
    const BoundaryTangent fd = velocity_boundary(curve, curve.size() / 2);
    const double scale = 1.0 + a.norm() + b.norm();
    worst_fd = std::max(worst_fd, ((fd.xi_minus - minus).norm() + (fd.xi_plus - plus).norm()) / scale);
    const BoundaryTangent exact = jacobi_to_boundary(GTangent::at_base(a, -b));
    worst_map = std::max(worst_map, ((exact.xi_minus - minus).norm() + (exact.xi_plus - plus).norm()) / scale);
  }
  return at_most(std::max(worst_fd, worst_map), 1e-5, "map " + fmt(worst_map) + ", finite differences " + fmt(worst_fd));
}

Outcome boundary_equivariance(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const GTangent gt = c.rng.gtangent(c.cfg);
    const Matrix g = c.rng.group_element(c.cfg);
    const BoundaryTangent a = jacobi_to_boundary(push_forward(g, gt));
    const BoundaryTangent b = d_pair_action(g, jacobi_to_boundary(gt));
    worst = std::max(worst, boundary_diff(a, b) / std::max(1.0, std::sqrt(b.scale())));
  }
  return at_most(worst, 1e-8);
}

Outcome mss_invariance(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const BoundaryTangent bt = c.rng.boundary_tangent(c.cfg);
    const Matrix g = c.rng.group_element(c.cfg);
    worst = std::max(worst, std::abs(norm_mss(d_pair_action(g, bt)) - norm_mss(bt)) / mss_scale(bt));
  }
  return at_most(worst, 1e-8);
}

// ------------------------------------------------------------------- charts

Outcome psi_roundtrip(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const OrientedGeodesic geo = c.rng.geodesic(c.cfg);
    worst = std::max(worst, geodesic_distance_proxy(from_unit_tangent(base_tangent(geo)), geo));
    const UnitTangent t0 = c.rng.unit_tangent(c.cfg);
    const UnitTangent back = base_tangent(from_unit_tangent(t0));
    // back must be a point of the geodesic of t0 with the same direction.
    const double s = std::asinh(inner(back.point.x, t0.dir));
    const UnitTangent on = geodesic_point(t0, s);
    const double scale = std::max(1.0, max_abs(on.point.x));
    worst = std::max(worst, (on.point.x - back.point.x).norm() / scale);
    worst = std::max(worst, (on.dir - back.dir).norm() / scale);
  }
  return at_most(worst, 1e-8);
}

Outcome minitwistor_roundtrip(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const OrientedGeodesic geo = c.rng.geodesic(c.cfg);
    const MinitwistorCoords m = minitwistor_F_inv(geo);
    worst = std::max(worst, geodesic_distance_proxy(minitwistor_F(m.v, m.x), geo));
    const Vector v = c.rng.unit_vector(c.cfg.boundary_dim());
    const Vector x = c.rng.orthogonal_unit(v) * c.rng.uniform(0.0, 3.0);
    const MinitwistorCoords back = minitwistor_F_inv(minitwistor_F(v, x));
    worst = std::max(worst, ((back.v - v).norm() + (back.x - x).norm()) / (1.0 + x.norm()));
  }
  return at_most(worst, 1e-8);
}

// ------------------------------------------------------------------- kahler

Outcome kahler_parallel(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const AlgebraElement x = h_element(c.rng.gaussian(2), c.rng.gaussian(2));
    const GTangent gt0 = GTangent::at_base(c.rng.gaussian(2), c.rng.gaussian(2));
    worst = std::max(worst, kahler_parallel_check(x, gt0, c.rng.uniform(0.1, 2.0), 40));
  }
  return at_most(worst, 1e-9);
}

Outcome kahler_negative_control(Ctx& c) {
  Matrix m = Matrix::Identity(4, 4);
  m(0, 0) = 2.0;
  const Matrix op = m * complex_structure_on_h() * m.inverse();
  double weakest = 1e300;
  for (int k = 0; k < 5; ++k) {
    const AlgebraElement x = h_element(c.rng.gaussian(2), c.rng.gaussian(2));
    const GTangent gt0 = GTangent::at_base(c.rng.gaussian(2), c.rng.gaussian(2));
    weakest = std::min(weakest, kahler_parallel_check(x, gt0, 2.0, 40, op));
  }
  return at_least(weakest, 1e-3, "non-invariant structure must be detected");
}

Outcome j0_orthogonal(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const GTangent gt = c.rng.gtangent(c.cfg);
    const GTangent j = j0_G3(gt);
    worst = std::max(worst, std::abs(norm_g1(j) - norm_g1(gt)) / gt.scale());
    worst = std::max(worst, std::abs(norm_g0(j) - norm_g0(gt)) / gt.scale());
  }
  return at_most(worst, 1e-12);
}

Outcome j0_square(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const GTangent gt = c.rng.gtangent(c.cfg);
    const GTangent jj = j0_G3(j0_G3(gt));
    worst = std::max(worst, std::max((jj.j0 + gt.j0).norm(), (jj.j1 + gt.j1).norm()) / std::sqrt(gt.scale()));
  }
  return at_most(worst, 1e-12);
}

Outcome j0_frame_independence(Ctx& c) {
  // j0 at k c_o uses lorentz_frame(k e0, k e1); pushing j0 at c_o forward by k
  // uses the frame k. Both must give the same tangent vector, compared in the
  // frame-free boundary model. Random g in G covers arbitrary base geodesics.
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const bool isotropy = k % 2 == 0;
    const GTangent gt = isotropy ? GTangent::at_base(c.rng.gaussian(2), c.rng.gaussian(2)) : c.rng.gtangent(c.cfg);
    const Matrix g = isotropy ? c.rng.isotropy_element(c.cfg) : c.rng.group_element(c.cfg);
    const BoundaryTangent a = jacobi_to_boundary(j0_G3(push_forward(g, gt)));
    const BoundaryTangent b = jacobi_to_boundary(push_forward(g, j0_G3(gt)));
    worst = std::max(worst, boundary_diff(a, b) / std::max(1.0, std::sqrt(b.scale())));
  }
  return at_most(worst, 1e-9);
}

// ----------------------------------------------------------------- octonion

Octonion random_octonion(Sampler& s) {
  Octonion o;
  for (double& v : o.c) v = s.normal();
  return o;
}

Outcome octonion_normed(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Octonion a = random_octonion(c.rng);
    const Octonion b = random_octonion(c.rng);
    worst = std::max(worst, std::abs(oct_mul(a, b).norm() - a.norm() * b.norm()) / (a.norm() * b.norm()));
    worst = std::max(worst, (oct_mul(Octonion::real(1.0), b) - b).norm());
    worst = std::max(worst, (oct_mul(a, Octonion::real(1.0)) - a).norm());
  }
  return at_most(worst, 1e-12);
}

Outcome octonion_alternative(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Octonion a = random_octonion(c.rng);
    const Octonion b = random_octonion(c.rng);
    const double s = a.norm() * a.norm() * b.norm();
    worst = std::max(worst, (oct_mul(a, oct_mul(a, b)) - oct_mul(oct_mul(a, a), b)).norm() / s);
    const double t = a.norm() * b.norm() * b.norm();
    worst = std::max(worst, (oct_mul(oct_mul(a, b), b) - oct_mul(a, oct_mul(b, b))).norm() / t);
  }
  return at_most(worst, 1e-11);
}

Outcome cross_identity(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Vector u = c.rng.gaussian(7);
    const Vector v = c.rng.gaussian(7);
    const Vector w = cross7(u, v);
    const double s = u.squaredNorm() * v.squaredNorm();
    worst = std::max(worst, std::abs(w.squaredNorm() - (s - u.dot(v) * u.dot(v))) / s);
    worst = std::max(worst, (std::abs(w.dot(u)) + std::abs(w.dot(v))) / std::sqrt(s) / (u.norm() + v.norm()));
    worst = std::max(worst, (w + cross7(v, u)).norm() / std::sqrt(s));
  }
  return at_most(worst, 1e-12);
}

Outcome big_j_square(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const BoundaryTangent bt = c.rng.boundary_tangent(c.cfg);
    const BoundaryTangent jj = big_J(big_J(bt));
    worst = std::max(worst, std::sqrt((jj.xi_minus + bt.xi_minus).squaredNorm() + (jj.xi_plus + bt.xi_plus).squaredNorm()) /
                                std::sqrt(bt.scale()));
  }
  return at_most(worst, 1e-10);
}

Outcome big_j_orthogonal(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const BoundaryTangent bt = c.rng.boundary_tangent(c.cfg);
    worst = std::max(worst, std::abs(norm_mss(big_J(bt)) - norm_mss(bt)) / mss_scale(bt));
  }
  return at_most(worst, 1e-10, "relative to 4|xi-||xi+|/|q-p|^2");
}

Outcome j_pq_properties(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const IdealPoint p{c.rng.unit_vector(7)};
    // Every tenth pair is antipodal.
    const IdealPoint q{k % 10 == 0 ? Vector(-p.dir) : c.rng.unit_vector(7)};
    const Vector y = c.rng.orthogonal_unit(q.dir) * c.rng.uniform(0.1, 3.0);
    const Vector jy = j_pq(p, q, y);
    worst = std::max(worst, std::abs(jy.dot(q.dir)) / y.norm());
    worst = std::max(worst, std::abs(jy.norm() - y.norm()) / y.norm());
    worst = std::max(worst, (j_pq(p, q, jy) + y).norm() / y.norm());
  }
  return at_most(worst, 1e-12);
}

BoundaryTangent tangent_at(Sampler& s, const BoundaryPair& at) {
  Vector a = s.gaussian(7);
  Vector b = s.gaussian(7);
  a -= a.dot(at.minus.dir) * at.minus.dir;
  b -= b.dot(at.plus.dir) * at.plus.dir;
  return BoundaryTangent{at, a, b};
}

Outcome nijenhuis_nonzero(Ctx& c) {
  double weakest = 1e300;
  int uncertified = 0;
  double worst_ratio_gap = 0.0;
  for (int point = 0; point < 10; ++point) {
    const BoundaryPair at = c.rng.geodesic(c.cfg);
    double best = 0.0;
    for (int pair = 0; pair < 3 && best <= 0.1; ++pair) {
      const NijenhuisCertificate cert = nijenhuis_certificate(at, tangent_at(c.rng, at), tangent_at(c.rng, at));
      if (!cert.converged) continue;
      best = std::max(best, cert.extrapolated);
      worst_ratio_gap = std::max(worst_ratio_gap, std::abs(cert.ratio - 4.0));
    }
    if (best <= 0.1) ++uncertified;
    weakest = std::min(weakest, best);
  }
  Outcome o = at_least(weakest, 0.1, "min over 10 points of |N| (Richardson-validated); max |ratio - 4| " +
                                          fmt(worst_ratio_gap));
  o.pass = o.pass && uncertified == 0;
  return o;
}

Outcome nijenhuis_antisymmetric(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const BoundaryPair at = c.rng.geodesic(c.cfg);
    const BoundaryTangent xi = tangent_at(c.rng, at);
    const BoundaryTangent eta = tangent_at(c.rng, at);
    const BoundaryTangent nxx = nijenhuis(at, xi, xi, 1e-4);
    const BoundaryTangent nxy = nijenhuis(at, xi, eta, 1e-4);
    const BoundaryTangent nyx = nijenhuis(at, eta, xi, 1e-4);
    const double s = std::sqrt(xi.scale() * eta.scale());
    worst = std::max(worst, std::sqrt(nxx.scale()) / xi.scale());
    worst = std::max(worst, std::sqrt((nxy.xi_minus + nyx.xi_minus).squaredNorm() + (nxy.xi_plus + nyx.xi_plus).squaredNorm()) / s);
  }
  return at_most(worst, 1e-6);
}

Outcome nijenhuis_submanifold(Ctx& c) {
  double worst = 0.0;
  double smallest = 1e300;
  for (int k = 0; k < 5; ++k) {
    const IdealPoint fixed{c.rng.unit_vector(7)};
    const IdealPoint q{c.rng.unit_vector(7)};
    const Vector x = c.rng.orthogonal_unit(q.dir);
    const Vector y = c.rng.orthogonal_unit(q.dir);
    const BoundaryPair at = OrientedGeodesic::checked(q, fixed);
    const Vector zero = Vector::Zero(7);
    const BoundaryTangent n = nijenhuis(at, BoundaryTangent{at, x, zero}, BoundaryTangent{at, y, zero}, 1e-4);
    const Vector ns = sphere_nijenhuis(q, x, y, 1e-4);
    smallest = std::min(smallest, ns.norm());
    worst = std::max(worst, ((n.xi_minus - ns).norm() + n.xi_plus.norm()) / std::max(1.0, ns.norm()));
  }
  Outcome o = at_most(worst, 1e-6, "smallest |N_S6| " + fmt(smallest));
  o.pass = o.pass && smallest > 0.1;
  return o;
}

Outcome equivariance_measurement(Ctx& c) {
  double worst = 0.0;
  double mean = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double d = equivariance_defect(c.rng.group_element(c.cfg), c.rng.boundary_tangent(c.cfg));
    worst = std::max(worst, d);
    mean += d / 20.0;
  }
  return report_only(worst, "max |dg J - J dg| / |xi| over 20 samples; mean " + fmt(mean));
}

// ------------------------------------------------------------------ registry

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"minkowski", "minkowski.killing_symmetric_invariant", killing_properties},
      {"minkowski", "minkowski.exp_group_law", exp_group_law},
      {"minkowski", "minkowski.exp_identity_component", exp_identity_component},
      {"minkowski", "minkowski.rotation_period", rotation_period},
      {"minkowski", "minkowski.split_projection", split_projection},
      {"minkowski", "minkowski.adz_flow", adz_flow_conjugation},
      {"minkowski", "minkowski.killing_on_h", killing_on_h},
      {"minkowski", "minkowski.lorentz_frame", frame_contract},

      {"hyperbolic", "hyperbolic.geodesic_on_hyperboloid", geodesic_on_hyperboloid},
      {"hyperbolic", "hyperbolic.exp_log_roundtrip", exp_log_roundtrip},
      {"hyperbolic", "hyperbolic.transport_isometry", transport_isometry},
      {"hyperbolic", "hyperbolic.jacobi_equation", jacobi_equation},
      {"hyperbolic", "hyperbolic.endpoints_equivariant", endpoints_equivariant},

      {"metrics", "metrics.g1_closed_form", g1_closed_form},
      {"metrics", "metrics.g0_closed_form", g0_closed_form, 2},
      {"metrics", "metrics.g1_invariance", [](Ctx& c) { return metric_invariance(c, false); }},
      {"metrics", "metrics.combo_invariance", [](Ctx& c) { return metric_invariance(c, true); }, 2},
      {"metrics", "metrics.signature", signature},
      {"metrics", "metrics.invariant_forms", invariant_forms},

      {"periodic", "periodic.closure_sweep", closure_sweep},
      {"periodic", "periodic.near_frontier", near_frontier_closure},
      {"periodic", "periodic.nonparallel_open", nonparallel_open, 0, 2},
      {"periodic", "periodic.timelike", periodic_timelike},

      {"curvature", "curvature.constant", curvature_constant},
      {"curvature", "curvature.value", curvature_value},

      {"presentation", "presentation.fixtures_residual", fixtures_residual},
      {"presentation", "presentation.random_residual", random_residual},
      {"presentation", "presentation.relift_offset", relift_offset},
      {"presentation", "presentation.zero_offsets", zero_offsets},
      {"presentation", "presentation.existence", presentation_existence},

      {"causal", "causal.three_way", three_way},
      {"causal", "causal.fixture_labels", fixture_labels},
      {"causal", "causal.orientation_g0", orientation_g0, 2},
      {"causal", "causal.reparametrization", reparametrization},

      {"boundary", "boundary.isometry", boundary_isometry},
      {"boundary", "boundary.closed_form", boundary_closed_form},
      {"boundary", "boundary.equivariance", boundary_equivariance},
      {"boundary", "boundary.mss_invariance", mss_invariance},

      {"charts", "charts.psi_roundtrip", psi_roundtrip},
      {"charts", "charts.minitwistor_roundtrip", minitwistor_roundtrip},

      {"kahler", "kahler.parallel", kahler_parallel},
      {"kahler", "kahler.negative_control", kahler_negative_control},
      {"kahler", "kahler.j0_orthogonal", j0_orthogonal},
      {"kahler", "kahler.j0_square", j0_square},
      {"kahler", "kahler.frame_independence", j0_frame_independence},

      {"octonion", "octonion.normed", octonion_normed},
      {"octonion", "octonion.alternative", octonion_alternative},
      {"octonion", "octonion.cross_identity", cross_identity},
      {"octonion", "octonion.j_square", big_j_square},
      {"octonion", "octonion.j_orthogonal", big_j_orthogonal},
      {"octonion", "octonion.j_pq", j_pq_properties},
      {"octonion", "octonion.nijenhuis_nonzero", nijenhuis_nonzero},
      {"octonion", "octonion.nijenhuis_antisymmetric", nijenhuis_antisymmetric},
      {"octonion", "octonion.nijenhuis_submanifold", nijenhuis_submanifold},
      {"octonion", "octonion.equivariance_defect", equivariance_measurement},
  };
  return defs;
}

const std::vector<std::string> kSuites = {"minkowski", "hyperbolic", "metrics", "periodic", "curvature", "presentation",
                                          "causal",    "boundary",   "charts",  "kahler",   "octonion"};

CheckRecord run_one(const CheckDef& def, int n, std::uint64_t seed) {
  CheckRecord rec;
  rec.name = def.name;
  rec.n = n;
  const auto start = std::chrono::steady_clock::now();
  try {
    Ctx ctx{SpaceConfig(n), Sampler(seed + name_hash(def.name))};
    const Outcome o = def.run(ctx);
    rec.value = o.value;
    rec.tolerance = o.tolerance;
    rec.comparison = o.comparison;
    rec.detail = o.detail;
    rec.status = o.info ? CheckStatus::Info : (o.pass ? CheckStatus::Pass : CheckStatus::Fail);
  } catch (const std::exception& e) {
    rec.status = CheckStatus::Fail;
    rec.detail = std::string("exception: ") + e.what();
  }
  rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "fail";
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out = kSuites;
  out.push_back("all");
  return out;
}

int suite_fixed_n(const std::string& suite) {
  if (suite == "curvature") return 1;
  if (suite == "kahler") return 2;
  if (suite == "octonion") return 6;
  return 0;
}

VerifyReport run_verify(const std::string& suite, int n, std::uint64_t seed, bool parallel) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end() && suite != "all") {
    throw schema_error("unknown suite '" + suite + "'");
  }
  if (n < 1) throw domain_error("n must be >= 1");
  const int fixed = suite_fixed_n(suite);
  if (fixed != 0 && fixed != n) {
    throw feature_error("suite '" + suite + "' requires n=" + std::to_string(fixed));
  }

  std::vector<std::pair<const CheckDef*, int>> plan;
  for (const auto& def : registry()) {
    if (suite != "all" && def.suite != suite) continue;
    const int effective = suite_fixed_n(def.suite) != 0 ? suite_fixed_n(def.suite) : n;
    if (def.only_n != 0 && def.only_n != effective) continue;
    if (effective < def.min_n) continue;
    plan.emplace_back(&def, effective);
  }

  VerifyReport report;
  report.suite = suite;
  report.n = n;
  report.seed = seed;
  if (parallel) {
    std::vector<std::future<CheckRecord>> jobs;
    jobs.reserve(plan.size());
    for (const auto& [def, dim] : plan) jobs.push_back(std::async(std::launch::async, run_one, std::cref(*def), dim, seed));
    for (auto& j : jobs) report.checks.push_back(j.get());
  } else {
    for (const auto& [def, dim] : plan) report.checks.push_back(run_one(*def, dim, seed));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckRecord& r) { return r.status != CheckStatus::Fail; });
  report.timestamp = utc_timestamp();
  return report;
}

}  // namespace hyperlines
