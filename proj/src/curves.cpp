#include "hyperlines/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperlines {

namespace {

void require_interior(std::size_t i, std::size_t size) {
  if (i == 0 || i + 1 >= size) {
    throw domain_error("sample index " + std::to_string(i) + " is not interior");
  }
}

// C^1 piecewise-cubic Hermite interpolant of the lift (point and direction),
// with slopes from second-order differences of the samples.
class LiftInterpolant {
 public:
  explicit LiftInterpolant(const CurveInG& c) : h_(c.step()) {
    const std::size_t n = c.size();
    for (const auto& l : c.lifts()) {
      points_.push_back(l.point.x);
      dirs_.push_back(l.dir);
    }
    point_slopes_ = slopes(points_);
    dir_slopes_ = slopes(dirs_);
    last_ = n - 1;
  }

  struct Sample {
    Vector p, v, dp, dv;
  };

  // t measured in grid units from the first sample.
  Sample eval(double t) const {
    std::size_t i = static_cast<std::size_t>(std::floor(t));
    if (i >= last_) i = last_ - 1;
    const double tau = t - static_cast<double>(i);
    const double t2 = tau * tau;
    const double t3 = t2 * tau;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + tau;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    const double d00 = 6 * t2 - 6 * tau, d10 = 3 * t2 - 4 * tau + 1;
    const double d01 = -6 * t2 + 6 * tau, d11 = 3 * t2 - 2 * tau;
    auto value = [&](const std::vector<Vector>& y, const std::vector<Vector>& m) {
      return Vector(h00 * y[i] + h10 * h_ * m[i] + h01 * y[i + 1] + h11 * h_ * m[i + 1]);
    };
    auto slope = [&](const std::vector<Vector>& y, const std::vector<Vector>& m) {
      return Vector((d00 * y[i] + d01 * y[i + 1]) / h_ + d10 * m[i] + d11 * m[i + 1]);
    };
    return {value(points_, point_slopes_), value(dirs_, dir_slopes_), slope(points_, point_slopes_),
            slope(dirs_, dir_slopes_)};
  }

 private:
  std::vector<Vector> slopes(const std::vector<Vector>& y) const {
    const std::size_t n = y.size();
    std::vector<Vector> m(n);
    m[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h_);
    m[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h_);
    for (std::size_t i = 1; i + 1 < n; ++i) m[i] = (y[i + 1] - y[i - 1]) / (2.0 * h_);
    return m;
  }

  double h_;
  std::size_t last_ = 0;
  std::vector<Vector> points_, dirs_, point_slopes_, dir_slopes_;
};

// Right-hand side of the offset equation at grid position t (grid units).
double offset_rate(const LiftInterpolant& lift, double f, double t) {
  const auto s = lift.eval(t);
  const double c = std::cosh(f);
  const double sh = std::sinh(f);
  const Vector psi_s = sh * s.p + c * s.v;
  const Vector psi_t = c * s.dp + sh * s.dv;
  const double speed2 = inner(psi_s, psi_s);
  // Unit speed by construction; a vanishing psi_s would mean a corrupted lift.
  if (!(speed2 > 0.5)) throw numeric_error("standard_presentation: degenerate geodesic speed");
  return -inner(psi_t, psi_s) / speed2;
}

double rk4_cell(const LiftInterpolant& lift, double f, double t_from, double direction, double h) {
  const double dt = direction / kPresentationSubsteps;  // grid units
  const double dh = dt * h;                             // parameter units
  double t = t_from;
  for (int k = 0; k < kPresentationSubsteps; ++k) {
    const double k1 = offset_rate(lift, f, t);
    const double k2 = offset_rate(lift, f + 0.5 * dh * k1, t + 0.5 * dt);
    const double k3 = offset_rate(lift, f + 0.5 * dh * k2, t + 0.5 * dt);
    const double k4 = offset_rate(lift, f + dh * k3, t + dt);
    f += dh * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    t += dt;
  }
  if (!(std::abs(f) <= kMaxGeodesicTime)) throw numeric_error("standard_presentation: offset diverged");
  return f;
}

std::vector<Vector> beta_samples(const StandardPresentation& sp) {
  std::vector<Vector> out;
  out.reserve(sp.size());
  for (const auto& d : sp.directions) out.push_back(d.point.x);
  return out;
}

std::vector<Vector> alpha_samples(const StandardPresentation& sp) {
  std::vector<Vector> out;
  out.reserve(sp.size());
  for (const auto& d : sp.directions) out.push_back(d.dir);
  return out;
}

double det4(const Vector& a, const Vector& b, const Vector& c, const Vector& d) {
  Eigen::Matrix4d m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  m.col(3) = d;
  return m.determinant();
}

}  // namespace

CurveInG CurveInG::checked(double h, std::vector<UnitTangent> lifts) {
  if (!(h > 0.0)) throw domain_error("curve step must be positive");
  if (lifts.size() < 5) throw domain_error("a curve needs at least five samples");
  const auto dim = lifts.front().point.x.size();
  for (auto& l : lifts) {
    if (l.point.x.size() != dim) throw dimension_error("curve samples differ in dimension");
    l = UnitTangent::checked(HPoint::checked(l.point.x), l.dir);
  }
  return CurveInG(h, std::move(lifts));
}

CurveInG CurveInG::from_pairs(double h, const std::vector<OrientedGeodesic>& pairs) {
  std::vector<UnitTangent> lifts;
  lifts.reserve(pairs.size());
  for (const auto& p : pairs) lifts.push_back(base_tangent(p));
  return checked(h, std::move(lifts));
}

StandardPresentation standard_presentation(const CurveInG& c, std::size_t origin, const HPoint& p) {
  if (origin >= c.size()) throw domain_error("presentation origin out of range");
  if (p.x.size() != c.ambient_dim()) throw dimension_error("presentation point has the wrong dimension");

  // gamma(s) = cosh(s) P + sinh(s) V satisfies <gamma(s), V> = sinh(s).
  const UnitTangent& l0 = c.lift(origin);
  const double s0 = std::asinh(inner(p.x, l0.dir));
  if (!(std::abs(s0) <= kMaxGeodesicTime) || distance(geodesic_point(l0, s0).point, p) > 1e-8) {
    throw domain_error("standard_presentation: p is not on the geodesic c(t_o)");
  }

  const LiftInterpolant lift(c);
  StandardPresentation sp;
  sp.h = c.step();
  sp.origin = origin;
  sp.offsets.assign(c.size(), 0.0);
  sp.offsets[origin] = s0;
  for (std::size_t i = origin; i + 1 < c.size(); ++i) {
    sp.offsets[i + 1] = rk4_cell(lift, sp.offsets[i], static_cast<double>(i), 1.0, sp.h);
  }
  for (std::size_t i = origin; i > 0; --i) {
    sp.offsets[i - 1] = rk4_cell(lift, sp.offsets[i], static_cast<double>(i), -1.0, sp.h);
  }
  sp.directions.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) sp.directions.push_back(geodesic_point(c.lift(i), sp.offsets[i]));
  return sp;
}

double presentation_residual(const StandardPresentation& sp) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < sp.size(); ++i) {
    const PresentationData d = presentation_data(sp, i);
    const double r = std::abs(inner(d.beta_dot.vec, d.alpha_dot.dir)) / (1.0 + d.beta_dot.norm());
    worst = std::max(worst, r);
  }
  return worst;
}

PresentationData presentation_data(const StandardPresentation& sp, std::size_t i) {
  require_interior(i, sp.size());
  const std::vector<Vector> beta = beta_samples(sp);
  const std::vector<Vector> alpha = alpha_samples(sp);
  const HPoint& base = sp.directions[i].point;
  HTangent beta_dot = HTangent::projected(base, (beta[i + 1] - beta[i - 1]) / (2.0 * sp.h));
  HTangent d_alpha = covariant_derivative(beta, alpha, sp.h, i).value;
  return {std::move(beta_dot), sp.directions[i], std::move(d_alpha)};
}

GTangent presentation_tangent(const StandardPresentation& sp, std::size_t i) {
  PresentationData d = presentation_data(sp, i);
  // Components along alpha' only reparametrize the geodesic; drop the residual.
  const Vector& u = d.alpha_dot.dir;
  Vector j0 = d.beta_dot.vec - inner(d.beta_dot.vec, u) * u;
  Vector j1 = d.d_alpha_dot.vec - inner(d.d_alpha_dot.vec, u) * u;
  return GTangent{d.alpha_dot, std::move(j0), std::move(j1)};
}

CausalType causal_classify_g1(const StandardPresentation& sp, std::size_t i, double band) {
  const PresentationData d = presentation_data(sp, i);
  const double a = d.beta_dot.norm();
  const double b = d.d_alpha_dot.norm();
  if (a + b == 0.0) return CausalType::Null;
  const double gap = a - b;
  if (std::abs(gap) <= band * (a * a + b * b) / (a + b)) return CausalType::Null;
  return gap > 0.0 ? CausalType::Spacelike : CausalType::Timelike;
}

CausalType causal_classify_g0(const StandardPresentation& sp, std::size_t i, double band) {
  SpaceConfig::from_ambient(sp.directions.front().ambient_dim()).require(2, "causal_classify_g0");
  const PresentationData d = presentation_data(sp, i);
  const double det = det4(d.beta_dot.vec, d.d_alpha_dot.vec, d.alpha_dot.dir, d.alpha_dot.point.x);
  const double scale = inner(d.beta_dot.vec, d.beta_dot.vec) + inner(d.d_alpha_dot.vec, d.d_alpha_dot.vec);
  return classify_norm(det, scale, band);
}

BoundaryTangent velocity_boundary(const CurveInG& c, std::size_t i) {
  require_interior(i, c.size());
  const OrientedGeodesic before = from_unit_tangent(c.lift(i - 1));
  const OrientedGeodesic here = from_unit_tangent(c.lift(i));
  const OrientedGeodesic after = from_unit_tangent(c.lift(i + 1));
  const double inv = 1.0 / (2.0 * c.step());
  Vector xm = (after.minus.dir - before.minus.dir) * inv;
  Vector xp = (after.plus.dir - before.plus.dir) * inv;
  xm -= xm.dot(here.minus.dir) * here.minus.dir;
  xp -= xp.dot(here.plus.dir) * here.plus.dir;
  return BoundaryTangent{here, std::move(xm), std::move(xp)};
}

}  // namespace hyperlines
