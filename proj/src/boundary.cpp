#include "hyperlines/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperlines {

namespace {

void check_tangent(const IdealPoint& z, const Vector& xi, const char* what) {
  if (xi.size() != z.dir.size()) throw dimension_error(std::string(what) + ": length mismatch");
  if (std::abs(xi.dot(z.dir)) > rel_tol(1e-10, xi.norm())) {
    throw domain_error(std::string(what) + ": vector is not tangent to the sphere");
  }
}

void check_group(const Matrix& g, Eigen::Index boundary_dim) {
  if (g.rows() != boundary_dim + 1 || !in_identity_component(g)) {
    throw domain_error("g is not in the identity component of O(1,n+1)");
  }
}

Vector null_lift(const IdealPoint& z) {
  Vector w = spatial_to_ambient(z.dir);
  w(0) = 1.0;
  return w;
}

}  // namespace

BoundaryTangent BoundaryTangent::checked(BoundaryPair at, Vector xi_minus, Vector xi_plus) {
  at = OrientedGeodesic::checked(std::move(at.minus), std::move(at.plus));
  check_tangent(at.minus, xi_minus, "xi_minus");
  check_tangent(at.plus, xi_plus, "xi_plus");
  return BoundaryTangent{std::move(at), std::move(xi_minus), std::move(xi_plus)};
}

BoundaryTangent BoundaryTangent::zero(BoundaryPair at) {
  const auto d = at.minus.dir.size();
  return BoundaryTangent{std::move(at), Vector::Zero(d), Vector::Zero(d)};
}

Vector reflection_T(const IdealPoint& p, const IdealPoint& q, const Vector& x) {
  if (p.dir.size() != q.dir.size() || x.size() != p.dir.size()) throw dimension_error("reflection_T: length mismatch");
  const Vector d = p.dir - q.dir;
  const double len = d.norm();
  if (len < 1e-8) throw domain_error("reflection_T: p = q");
  const Vector nhat = d / len;
  return x - 2.0 * x.dot(nhat) * nhat;
}

double norm_mss(const BoundaryTangent& bt) {
  const Vector tx = reflection_T(bt.at.minus, bt.at.plus, bt.xi_minus);
  return 4.0 * tx.dot(bt.xi_plus) / (bt.at.plus.dir - bt.at.minus.dir).squaredNorm();
}

double mss_bilinear(const BoundaryTangent& a, const BoundaryTangent& b) {
  if (geodesic_distance_proxy(a.at, b.at) > 1e-12) throw domain_error("mss_bilinear: tangents at different pairs");
  const IdealPoint& p = a.at.minus;
  const IdealPoint& q = a.at.plus;
  const double d2 = (q.dir - p.dir).squaredNorm();
  return 2.0 * (reflection_T(p, q, a.xi_minus).dot(b.xi_plus) + reflection_T(p, q, b.xi_minus).dot(a.xi_plus)) / d2;
}

IdealPoint mobius_action(const Matrix& g, const IdealPoint& z) {
  check_group(g, z.dir.size());
  const Vector w = g * null_lift(z);
  if (!(w(0) > 0.0)) throw domain_error("mobius_action: image is not future pointing");
  Vector out = ambient_to_spatial(w) / w(0);
  out.normalize();
  return IdealPoint{std::move(out)};
}

Vector d_mobius(const Matrix& g, const IdealPoint& z, const Vector& xi) {
  check_group(g, z.dir.size());
  check_tangent(z, xi, "d_mobius");
  const Vector w = g * null_lift(z);
  const Vector dw = g * spatial_to_ambient(xi);
  // Quotient rule for spatial(w) / w0.
  const Vector ws = ambient_to_spatial(w);
  Vector out = ambient_to_spatial(dw) / w(0) - ws * (dw(0) / (w(0) * w(0)));
  const Vector image = ws.normalized();
  out -= out.dot(image) * image;
  return out;
}

BoundaryPair pair_action(const Matrix& g, const BoundaryPair& bp) {
  return OrientedGeodesic::checked(mobius_action(g, bp.minus), mobius_action(g, bp.plus));
}

BoundaryTangent d_pair_action(const Matrix& g, const BoundaryTangent& bt) {
  return BoundaryTangent{pair_action(g, bt.at), d_mobius(g, bt.at.minus, bt.xi_minus),
                         d_mobius(g, bt.at.plus, bt.xi_plus)};
}

BoundaryTangent jacobi_to_boundary(const GTangent& gt) {
  const GTangent checked = GTangent::checked(gt.base, gt.j0, gt.j1);
  const Matrix g = lorentz_frame(checked.base.point.x, checked.base.dir);
  const Matrix gi = lorentz_inverse(g);
  const SpaceConfig cfg = SpaceConfig::from_ambient(checked.ambient_dim());
  const Vector x = Vector(gi * checked.j0).tail(cfg.n());
  const Vector y = Vector(gi * checked.j1).tail(cfg.n());

  // At (-e1, e1) with J(0) = x, J'(0) = y: (x - y, x + y).
  Vector minus = Vector::Zero(cfg.boundary_dim());
  Vector plus = Vector::Zero(cfg.boundary_dim());
  minus.tail(cfg.n()) = x - y;
  plus.tail(cfg.n()) = x + y;
  const BoundaryTangent at_base{OrientedGeodesic::base(cfg), std::move(minus), std::move(plus)};
  return d_pair_action(g, at_base);
}

}  // namespace hyperlines
