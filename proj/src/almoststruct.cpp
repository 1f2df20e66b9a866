#include "hyperlines/almoststruct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hyperlines {

namespace {

using Quaternion = std::array<double, 4>;

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quaternion qsub(const Quaternion& a, const Quaternion& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Quaternion qadd(const Quaternion& a, const Quaternion& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

void require_s6(const IdealPoint& p, const char* what) {
  if (p.dir.size() != 7) throw feature_error(std::string(what) + " requires n=6 (points of S^6)");
}

void require_tangent(const IdealPoint& p, const Vector& x, const char* what) {
  if (x.size() != p.dir.size()) throw dimension_error(std::string(what) + ": length mismatch");
  if (std::abs(x.dot(p.dir)) > rel_tol(1e-10, x.norm())) {
    throw domain_error(std::string(what) + ": vector is not tangent");
  }
}

// Ambient-extended structures for the finite-difference Nijenhuis tensor.
using Point = Vector;  // concatenation (a, b) in R^7 x R^7, or a in R^7
using Field = std::function<Vector(const Point&)>;

Vector project_sphere(const Vector& a, const Vector& v) {
  const Vector u = a.normalized();
  return v - v.dot(u) * u;
}

Vector reflect(const Vector& p, const Vector& q, const Vector& x) {
  const Vector nhat = (p - q).normalized();
  return x - 2.0 * x.dot(nhat) * nhat;
}

// J at an ambient point of R^14 (normalizing each factor).
Vector apply_pair_J(const Point& z, const Vector& w) {
  const Vector p = z.head(7).normalized();
  const Vector q = z.tail(7).normalized();
  Vector out(14);
  out.head(7) = cross7(p, w.head(7));
  out.tail(7) = reflect(p, q, cross7(p, reflect(p, q, w.tail(7))));
  return out;
}

Vector apply_sphere_j(const Point& z, const Vector& w) { return cross7(z.normalized(), w); }

Vector directional(const Field& f, const Point& z, const Vector& w, double h) {
  return (f(z + h * w) - f(z - h * w)) / (2.0 * h);
}

Vector lie_bracket(const Field& u, const Field& v, const Point& z, double h) {
  return directional(v, z, u(z), h) - directional(u, z, v(z), h);
}

Vector nijenhuis_generic(const Field& x, const Field& y,
                         const std::function<Vector(const Point&, const Vector&)>& j, const Point& z,
                         double h) {
  const Field jx = [&](const Point& p) { return j(p, x(p)); };
  const Field jy = [&](const Point& p) { return j(p, y(p)); };
  return lie_bracket(jx, jy, z, h) - j(z, lie_bracket(jx, y, z, h)) - j(z, lie_bracket(x, jy, z, h)) -
         lie_bracket(x, y, z, h);
}

Vector pair_vector(const BoundaryTangent& bt) {
  Vector v(14);
  v.head(7) = bt.xi_minus;
  v.tail(7) = bt.xi_plus;
  return v;
}

Field pair_field(const Vector& constant) {
  return [constant](const Point& z) {
    Vector out(14);
    out.head(7) = project_sphere(z.head(7), constant.head(7));
    out.tail(7) = project_sphere(z.tail(7), constant.tail(7));
    return out;
  };
}

}  // namespace

Octonion Octonion::real(double r) {
  Octonion o;
  o.c[0] = r;
  return o;
}

Octonion Octonion::unit(int k) {
  if (k < 0 || k > 7) throw domain_error("octonion unit index must be in 0..7");
  Octonion o;
  o.c[static_cast<std::size_t>(k)] = 1.0;
  return o;
}

Octonion Octonion::from_imaginary(const Vector& v) {
  if (v.size() != 7) throw dimension_error("imaginary octonions have 7 components");
  Octonion o;
  for (int k = 0; k < 7; ++k) o.c[static_cast<std::size_t>(k + 1)] = v(k);
  return o;
}

Vector Octonion::imaginary() const {
  Vector v(7);
  for (int k = 0; k < 7; ++k) v(k) = c[static_cast<std::size_t>(k + 1)];
  return v;
}

Octonion Octonion::conj() const {
  Octonion o = *this;
  for (std::size_t k = 1; k < 8; ++k) o.c[k] = -o.c[k];
  return o;
}

double Octonion::norm() const {
  double s = 0.0;
  for (double x : c) s += x * x;
  return std::sqrt(s);
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (std::size_t k = 0; k < 8; ++k) r.c[k] = c[k] + o.c[k];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (std::size_t k = 0; k < 8; ++k) r.c[k] = c[k] - o.c[k];
  return r;
}

Octonion Octonion::operator*(double s) const {
  Octonion r;
  for (std::size_t k = 0; k < 8; ++k) r.c[k] = c[k] * s;
  return r;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  // (a, b)(c, d) = (ac - d* b, da + b c*).
  const Quaternion a{x.c[0], x.c[1], x.c[2], x.c[3]};
  const Quaternion b{x.c[4], x.c[5], x.c[6], x.c[7]};
  const Quaternion c{y.c[0], y.c[1], y.c[2], y.c[3]};
  const Quaternion d{y.c[4], y.c[5], y.c[6], y.c[7]};
  const Quaternion lo = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quaternion hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  Octonion r;
  for (std::size_t k = 0; k < 4; ++k) {
    r.c[k] = lo[k];
    r.c[k + 4] = hi[k];
  }
  return r;
}

Vector cross7(const Vector& u, const Vector& v) {
  return oct_mul(Octonion::from_imaginary(u), Octonion::from_imaginary(v)).imaginary();
}

Vector j_sphere(const IdealPoint& p, const Vector& x) {
  require_s6(p, "j_sphere");
  require_tangent(p, x, "j_sphere");
  return cross7(p.dir, x);
}

Vector j_pq(const IdealPoint& p, const IdealPoint& q, const Vector& y) {
  require_s6(p, "j_pq");
  require_tangent(q, y, "j_pq");
  return reflection_T(p, q, cross7(p.dir, reflection_T(p, q, y)));
}

BoundaryTangent big_J(const BoundaryTangent& bt) {
  require_s6(bt.at.minus, "big_J");
  return BoundaryTangent{bt.at, j_sphere(bt.at.minus, bt.xi_minus), j_pq(bt.at.minus, bt.at.plus, bt.xi_plus)};
}

GTangent apply_h_operator(const GTangent& gt, const Matrix& op) {
  const auto n = gt.ambient_dim() - 2;
  if (op.rows() != 2 * n || op.cols() != 2 * n) throw dimension_error("h operator has the wrong size");
  const Matrix g = lorentz_frame(gt.base.point.x, gt.base.dir);
  const Matrix gi = lorentz_inverse(g);
  Vector xy(2 * n);
  xy.head(n) = Vector(gi * gt.j0).tail(n);
  xy.tail(n) = Vector(gi * gt.j1).tail(n);
  const Vector image = op * xy;
  Vector j0 = Vector::Zero(n + 2);
  Vector j1 = Vector::Zero(n + 2);
  j0.tail(n) = image.head(n);
  j1.tail(n) = image.tail(n);
  return GTangent{gt.base, g * j0, g * j1};
}

Matrix complex_structure_on_h() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 1) = -1.0;
  m(1, 0) = 1.0;
  m(2, 3) = -1.0;
  m(3, 2) = 1.0;
  return m;
}

GTangent j0_G3(const GTangent& gt) {
  SpaceConfig::from_ambient(gt.ambient_dim()).require(2, "j0_G3");
  return apply_h_operator(gt, complex_structure_on_h());
}

double kahler_parallel_check(const AlgebraElement& x, const GTangent& gt0, double T, int steps,
                             const std::optional<Matrix>& op) {
  const SpaceConfig cfg = SpaceConfig::from_ambient(gt0.ambient_dim());
  cfg.require(2, "kahler_parallel_check");
  if (steps < 1) throw domain_error("kahler_parallel_check: steps must be >= 1");
  const UnitTangent base = UnitTangent::base(cfg);
  if ((gt0.base.point.x - base.point.x).norm() > 1e-12 || (gt0.base.dir - base.dir).norm() > 1e-12) {
    throw domain_error("kahler_parallel_check: gt0 must sit at the base geodesic");
  }
  if (max_abs(algebra_split(x).go_part.mat) > rel_tol(1e-10, max_abs(x.mat))) {
    throw domain_error("kahler_parallel_check: X must lie in h");
  }
  const Matrix structure = op.value_or(complex_structure_on_h());
  const GTangent rotated0 = apply_h_operator(gt0, structure);

  double worst = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double t = T * static_cast<double>(k) / steps;
    const Matrix g = group_exp(x, t);
    // Parallel fields along exp(tX)c_o are the pushforwards of their initial value.
    const GTangent moved = apply_h_operator(push_forward(g, gt0), structure);
    const GTangent expected = push_forward(g, rotated0);
    const double diff = std::max((moved.j0 - expected.j0).norm(), (moved.j1 - expected.j1).norm());
    const double scale = std::max(1.0, expected.j0.norm() + expected.j1.norm());
    worst = std::max(worst, diff / scale);
  }
  return worst;
}

BoundaryTangent nijenhuis(const BoundaryPair& at, const BoundaryTangent& xi, const BoundaryTangent& eta, double h) {
  require_s6(at.minus, "nijenhuis");
  if (!(h > 0.0)) throw domain_error("nijenhuis: step must be positive");
  const BoundaryPair pair = OrientedGeodesic::checked(at.minus, at.plus);
  Point z(14);
  z.head(7) = pair.minus.dir;
  z.tail(7) = pair.plus.dir;
  const Vector n = nijenhuis_generic(pair_field(pair_vector(xi)), pair_field(pair_vector(eta)), apply_pair_J, z, h);
  return BoundaryTangent{pair, n.head(7), n.tail(7)};
}

Vector sphere_nijenhuis(const IdealPoint& p, const Vector& x, const Vector& y, double h) {
  require_s6(p, "sphere_nijenhuis");
  const Field fx = [x](const Point& z) { return project_sphere(z, x); };
  const Field fy = [y](const Point& z) { return project_sphere(z, y); };
  return nijenhuis_generic(fx, fy, apply_sphere_j, p.dir, h);
}

NijenhuisCertificate nijenhuis_certificate(const BoundaryPair& at, const BoundaryTangent& xi,
                                           const BoundaryTangent& eta, double h) {
  const Vector n1 = pair_vector(nijenhuis(at, xi, eta, h));
  const Vector n2 = pair_vector(nijenhuis(at, xi, eta, h / 2));
  const Vector n4 = pair_vector(nijenhuis(at, xi, eta, h / 4));
  NijenhuisCertificate cert;
  cert.norm_h = n1.norm();
  cert.norm_half = n2.norm();
  cert.extrapolated = ((4.0 * n2 - n1) / 3.0).norm();
  cert.step_change = (n1 - n2).norm();
  const double next = (n2 - n4).norm();
  cert.ratio = next > 0.0 ? cert.step_change / next : 0.0;
  cert.converged = cert.step_change <= 1e-6 * (1.0 + cert.extrapolated);
  return cert;
}

double equivariance_defect(const Matrix& g, const BoundaryTangent& bt) {
  const BoundaryTangent a = d_pair_action(g, big_J(bt));
  const BoundaryTangent b = big_J(d_pair_action(g, bt));
  const double s = std::sqrt(bt.scale());
  const double d = std::sqrt((a.xi_minus - b.xi_minus).squaredNorm() + (a.xi_plus - b.xi_plus).squaredNorm());
  return s > 0.0 ? d / s : 0.0;
}

}  // namespace hyperlines
