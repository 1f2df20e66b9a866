#include "hyperlines/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperlines {

namespace {

// Invariant tolerance for quantities quadratic in the coordinates.
double quad_tol(double tol, const Vector& x) {
  const double s = max_abs(x);
  return rel_tol(tol, s * s);
}

void check_time(double t) {
  if (!(std::abs(t) <= kMaxGeodesicTime)) {
    throw range_error("geodesic parameter |t| = " + std::to_string(std::abs(t)) + " exceeds " +
                      std::to_string(kMaxGeodesicTime));
  }
}

}  // namespace

HPoint HPoint::checked(Vector x) {
  if (x.size() < 3) throw dimension_error("HPoint needs ambient dimension >= 3");
  if (!x.allFinite()) throw domain_error("HPoint has non-finite coordinates");
  if (std::abs(inner(x, x) + 1.0) > quad_tol(1e-10, x) || x(0) <= 0.0) {
    throw domain_error("point is not on the upper hyperboloid");
  }
  return HPoint{std::move(x)};
}

HPoint HPoint::origin(const SpaceConfig& cfg) { return HPoint{basis_vector(cfg.ambient_dim(), 0)}; }

HPoint HPoint::normalized(const Vector& x) {
  const double q = -inner(x, x);
  if (!(q > 0.0) || x(0) <= 0.0) throw domain_error("cannot normalize a non-future-timelike vector");
  return HPoint{x / std::sqrt(q)};
}

HTangent HTangent::checked(HPoint base, Vector vec) {
  if (vec.size() != base.x.size()) throw dimension_error("tangent vector length mismatch");
  const double scale = std::max(max_abs(base.x), max_abs(vec));
  if (std::abs(inner(base.x, vec)) > rel_tol(1e-10, scale * scale)) {
    throw domain_error("vector is not tangent at the base point");
  }
  return HTangent{std::move(base), std::move(vec)};
}

HTangent HTangent::projected(HPoint base, const Vector& vec) {
  if (vec.size() != base.x.size()) throw dimension_error("tangent vector length mismatch");
  Vector v = vec + inner(vec, base.x) * base.x;
  return HTangent{std::move(base), std::move(v)};
}

double HTangent::norm() const { return std::sqrt(std::max(0.0, inner(vec, vec))); }

UnitTangent UnitTangent::checked(HPoint point, Vector dir) {
  if (dir.size() != point.x.size()) throw dimension_error("direction length mismatch");
  const double scale = std::max(max_abs(point.x), max_abs(dir));
  const double tol = rel_tol(1e-10, scale * scale);
  if (std::abs(inner(point.x, dir)) > tol) throw domain_error("direction is not tangent");
  if (std::abs(inner(dir, dir) - 1.0) > tol) throw domain_error("direction is not a unit vector");
  return UnitTangent{std::move(point), std::move(dir)};
}

UnitTangent UnitTangent::normalized(const Vector& point, const Vector& dir) {
  HPoint p = HPoint::normalized(point);
  Vector d = dir + inner(dir, p.x) * p.x;
  const double n2 = inner(d, d);
  if (!(n2 > 0.0)) throw domain_error("degenerate direction");
  d /= std::sqrt(n2);
  return UnitTangent{std::move(p), std::move(d)};
}

UnitTangent UnitTangent::base(const SpaceConfig& cfg) {
  return UnitTangent{HPoint::origin(cfg), basis_vector(cfg.ambient_dim(), 1)};
}

IdealPoint IdealPoint::checked(Vector dir) {
  if (dir.size() < 2) throw dimension_error("ideal point needs dimension >= 2");
  if (!dir.allFinite() || std::abs(dir.norm() - 1.0) > 1e-12) {
    throw domain_error("ideal point must be a unit vector");
  }
  return IdealPoint{std::move(dir)};
}

Vector spatial_to_ambient(const Vector& v) {
  Vector a = Vector::Zero(v.size() + 1);
  a.tail(v.size()) = v;
  return a;
}

Vector ambient_to_spatial(const Vector& v) { return v.tail(v.size() - 1); }

UnitTangent geodesic_point(const UnitTangent& t0, double t) {
  check_time(t);
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  // Exact up to rounding; renormalizing by the Minkowski norm would cancel
  // catastrophically once the coordinates grow like e^|t|.
  return UnitTangent{HPoint{c * t0.point.x + s * t0.dir}, s * t0.point.x + c * t0.dir};
}

double distance(const HPoint& p, const HPoint& q) {
  if (p.x.size() != q.x.size()) throw dimension_error("distance: dimension mismatch");
  // -<p,q> = cosh d. Far apart the chord below cancels in the squares of
  // coordinates of size e^d, so acosh is the accurate form there.
  const double c = -inner(p.x, q.x);
  if (c > 2.0) return std::acosh(c);
  // <p-q, p-q> = 4 sinh^2(d/2); better conditioned than acosh near 0.
  const Vector d = p.x - q.x;
  const double chord2 = std::max(0.0, inner(d, d));
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

HPoint exp_map(const HTangent& w) {
  const double r = w.norm();
  if (r == 0.0) return w.base;
  check_time(r);
  return HPoint::normalized(std::cosh(r) * w.base.x + std::sinh(r) / r * w.vec);
}

HTangent log_map(const HPoint& p, const HPoint& q) {
  if (p.x.size() != q.x.size()) throw dimension_error("log_map: dimension mismatch");
  const double d = distance(p, q);
  Vector u = q.x + inner(p.x, q.x) * p.x;
  const double un = std::sqrt(std::max(0.0, inner(u, u)));
  if (d == 0.0 || un == 0.0) return HTangent{p, Vector::Zero(p.x.size())};
  return HTangent::projected(p, u * (d / un));
}

HTangent parallel_transport(const UnitTangent& t0, double t, const HTangent& w) {
  check_time(t);
  if (w.vec.size() != t0.point.x.size()) throw dimension_error("parallel_transport: dimension mismatch");
  const double scale = std::max(max_abs(t0.point.x), max_abs(w.vec));
  if (std::abs(inner(w.vec, t0.point.x)) > rel_tol(1e-10, scale * scale) ||
      (w.base.x - t0.point.x).cwiseAbs().maxCoeff() > rel_tol(1e-10, max_abs(t0.point.x))) {
    throw domain_error("parallel_transport: w is not tangent at the start point");
  }
  // The component along the velocity follows gamma'(t); the rest is constant.
  const double a = inner(w.vec, t0.dir);
  const UnitTangent end = geodesic_point(t0, t);
  Vector out = w.vec + a * (std::sinh(t) * t0.point.x + (std::cosh(t) - 1.0) * t0.dir);
  return HTangent::projected(end.point, out);
}

CovariantDerivative covariant_derivative(std::span<const Vector> curve, std::span<const Vector> field,
                                         double h, std::size_t i) {
  if (curve.size() != field.size()) throw dimension_error("curve and field sample counts differ");
  if (curve.size() < 2) throw domain_error("need at least two samples");
  if (i >= curve.size()) throw domain_error("sample index out of range");
  if (!(h > 0.0)) throw domain_error("grid step must be positive");

  const std::size_t last = curve.size() - 1;
  Vector diff;
  bool one_sided = false;
  if (i == 0) {
    diff = (field[1] - field[0]) / h;
    one_sided = true;
  } else if (i == last) {
    diff = (field[last] - field[last - 1]) / h;
    one_sided = true;
  } else {
    diff = (field[i + 1] - field[i - 1]) / (2.0 * h);
  }
  return {HTangent::projected(HPoint{curve[i]}, diff), one_sided};
}

JacobiState jacobi_eval(const UnitTangent& t0, const HTangent& j0, const HTangent& j1, double t) {
  const double scale = std::max({max_abs(t0.point.x), max_abs(j0.vec), max_abs(j1.vec)});
  const double tol = rel_tol(1e-10, scale * scale);
  if (std::abs(inner(j0.vec, t0.dir)) > tol || std::abs(inner(j1.vec, t0.dir)) > tol) {
    throw domain_error("jacobi_eval: initial data must be orthogonal to the geodesic");
  }
  const HTangent a = parallel_transport(t0, t, j0);
  const HTangent b = parallel_transport(t0, t, j1);
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  return {HTangent{a.base, c * a.vec + s * b.vec}, HTangent{a.base, s * a.vec + c * b.vec}};
}

std::pair<IdealPoint, IdealPoint> ideal_endpoints(const UnitTangent& t0) {
  const Vector& p = t0.point.x;
  const Vector& v = t0.dir;
  const double dm = p(0) - v(0);
  const double dp = p(0) + v(0);
  if (!(dm > 0.0) || !(dp > 0.0)) throw domain_error("ideal_endpoints: not a unit tangent");
  // (p +- v) is null and future pointing; its projectivization is e0 + z.
  Vector minus = ambient_to_spatial(p - v) / dm;
  Vector plus = ambient_to_spatial(p + v) / dp;
  minus.normalize();
  plus.normalize();
  return {IdealPoint{std::move(minus)}, IdealPoint{std::move(plus)}};
}

}  // namespace hyperlines
