#include "hyperlines/linespace.hpp"

#include <Eigen/Eigenvalues>

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace hyperlines {

namespace {

constexpr double kPi = std::numbers::pi;

void require_h(const AlgebraElement& x, const char* op) {
  const HSplit split = algebra_split(x);
  if (max_abs(split.go_part.mat) > rel_tol(1e-10, max_abs(x.mat))) {
    throw domain_error(std::string(op) + ": element is not in the complement h");
  }
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

OrientedGeodesic OrientedGeodesic::checked(IdealPoint minus, IdealPoint plus) {
  if (minus.dir.size() != plus.dir.size()) throw dimension_error("endpoints of different dimension");
  IdealPoint::checked(minus.dir);
  IdealPoint::checked(plus.dir);
  if ((minus.dir - plus.dir).norm() < 1e-8) throw domain_error("endpoints coincide (diagonal)");
  return OrientedGeodesic{std::move(minus), std::move(plus)};
}

OrientedGeodesic OrientedGeodesic::base(const SpaceConfig& cfg) {
  Vector e1 = Vector::Zero(cfg.boundary_dim());
  e1(0) = 1.0;
  return OrientedGeodesic{IdealPoint{-e1}, IdealPoint{e1}};
}

double geodesic_distance_proxy(const OrientedGeodesic& a, const OrientedGeodesic& b) {
  return (a.minus.dir - b.minus.dir).norm() + (a.plus.dir - b.plus.dir).norm();
}

GTangent GTangent::checked(UnitTangent base, Vector j0, Vector j1) {
  const auto dim = base.point.x.size();
  if (j0.size() != dim || j1.size() != dim) throw dimension_error("Jacobi data length mismatch");
  const double scale = std::max({max_abs(base.point.x), max_abs(j0), max_abs(j1)});
  const double tol = rel_tol(1e-10, scale * scale);
  const Vector& p = base.point.x;
  const Vector& u = base.dir;
  if (std::abs(inner(j0, p)) > tol || std::abs(inner(j1, p)) > tol) {
    throw domain_error("Jacobi data must be tangent at the base point");
  }
  if (std::abs(inner(j0, u)) > tol || std::abs(inner(j1, u)) > tol) {
    throw domain_error("Jacobi data must be orthogonal to the geodesic");
  }
  return GTangent{std::move(base), std::move(j0), std::move(j1)};
}

GTangent GTangent::at_base(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw dimension_error("x and y differ in length");
  const SpaceConfig cfg(static_cast<int>(x.size()));
  Vector j0 = Vector::Zero(cfg.ambient_dim());
  Vector j1 = Vector::Zero(cfg.ambient_dim());
  j0.tail(cfg.n()) = x;
  // The velocity of exp(s y_v) c_o has J'(0) = -y: y_v turns e1 towards -y.
  j1.tail(cfg.n()) = -y;
  return GTangent{UnitTangent::base(cfg), std::move(j0), std::move(j1)};
}

double GTangent::scale() const { return inner(j0, j0) + inner(j1, j1); }

const char* to_string(CausalType type) {
  switch (type) {
    case CausalType::Spacelike: return "Spacelike";
    case CausalType::Timelike: return "Timelike";
    case CausalType::Null: return "Null";
  }
  return "?";
}

MetricChoice MetricChoice::combo(double lambda, double mu) {
  if (lambda == 0.0 && mu == 0.0) throw domain_error("combo metric needs (lambda, mu) != (0, 0)");
  return MetricChoice(Kind::Combo, lambda, mu);
}

void MetricChoice::validate(const SpaceConfig& cfg) const {
  if (kind_ != Kind::G1) cfg.require(2, "the metric g0");
}

OrientedGeodesic from_unit_tangent(const UnitTangent& t0) {
  auto [minus, plus] = ideal_endpoints(t0);
  return OrientedGeodesic::checked(std::move(minus), std::move(plus));
}

UnitTangent base_tangent(const OrientedGeodesic& geo) {
  const OrientedGeodesic g = OrientedGeodesic::checked(geo.minus, geo.plus);
  const double d = (g.plus.dir - g.minus.dir).norm();
  Vector u = spatial_to_ambient(g.minus.dir);
  Vector w = spatial_to_ambient(g.plus.dir);
  u(0) = 1.0;
  w(0) = 1.0;
  return UnitTangent::normalized((u + w) / d, (w - u) / d);
}

OrientedGeodesic minitwistor_F(const Vector& v, const Vector& x) {
  if (v.size() != x.size()) throw dimension_error("minitwistor: v and x differ in length");
  const double scale = std::max(1.0, x.norm());
  if (std::abs(v.norm() - 1.0) > 1e-10) throw domain_error("minitwistor: v must be a unit vector");
  if (std::abs(v.dot(x)) > 1e-10 * scale) throw domain_error("minitwistor: v and x must be orthogonal");

  const SpaceConfig cfg = SpaceConfig::from_ambient(v.size() + 1);
  const HPoint o = HPoint::origin(cfg);
  const HTangent dir0{o, spatial_to_ambient(v)};
  const double r = x.norm();
  if (r == 0.0) return from_unit_tangent(UnitTangent{o, dir0.vec});

  const UnitTangent radial{o, spatial_to_ambient(x / r)};
  const HTangent moved = parallel_transport(radial, r, dir0);
  return from_unit_tangent(UnitTangent::normalized(moved.base.x, moved.vec));
}

MinitwistorCoords minitwistor_F_inv(const OrientedGeodesic& geo) {
  // base_tangent already sits at the foot of the perpendicular from e0.
  const UnitTangent foot = base_tangent(geo);
  const SpaceConfig cfg = SpaceConfig::from_ambient(foot.point.x.size());
  const HPoint o = HPoint::origin(cfg);
  const HTangent x = log_map(o, foot.point);
  const double r = x.norm();
  if (r == 0.0) return {ambient_to_spatial(foot.dir).normalized(), Vector::Zero(cfg.boundary_dim())};

  const UnitTangent outward = geodesic_point(UnitTangent{o, x.vec / r}, r);
  const UnitTangent inward{foot.point, -outward.dir};
  const HTangent back = parallel_transport(inward, r, HTangent{foot.point, foot.dir});
  return {ambient_to_spatial(back.vec).normalized(), ambient_to_spatial(x.vec)};
}

double norm_g1(const GTangent& gt) { return inner(gt.j0, gt.j0) - inner(gt.j1, gt.j1); }

double norm_g0(const GTangent& gt) {
  SpaceConfig::from_ambient(gt.ambient_dim()).require(2, "norm_g0");
  // T_p H^3 is oriented by det[b1 b2 b3 p] > 0; with (b1, b2, b3) = (J0, J1, u)
  // this is <ix, y> at c_o.
  return det4(gt.j0, gt.j1, gt.base.dir, gt.base.point.x);
}

double norm_combo(const GTangent& gt, double lambda, double mu) {
  const MetricChoice m = MetricChoice::combo(lambda, mu);
  m.validate(SpaceConfig::from_ambient(gt.ambient_dim()));
  return lambda * norm_g0(gt) + mu * norm_g1(gt);
}

double norm(const GTangent& gt, const MetricChoice& metric) {
  switch (metric.kind()) {
    case MetricChoice::Kind::G1: return norm_g1(gt);
    case MetricChoice::Kind::G0: return norm_g0(gt);
    case MetricChoice::Kind::Combo: return norm_combo(gt, metric.lambda(), metric.mu());
  }
  return 0.0;
}

CausalType classify_norm(double value, double scale, double band) {
  if (std::abs(value) <= band * scale) return CausalType::Null;
  return value > 0.0 ? CausalType::Spacelike : CausalType::Timelike;
}

GTangent push_forward(const Matrix& g, const GTangent& gt) {
  if (g.rows() != gt.ambient_dim() || !in_identity_component(g)) {
    throw domain_error("push_forward: g is not in the identity component of O(1,n+1)");
  }
  return GTangent{UnitTangent{HPoint{g * gt.base.point.x}, g * gt.base.dir}, g * gt.j0, g * gt.j1};
}

std::pair<Vector, Vector> h_coordinates(const GTangent& gt) {
  const Matrix gi = lorentz_inverse(lorentz_frame(gt.base.point.x, gt.base.dir));
  const auto n = gt.ambient_dim() - 2;
  return {Vector(gi * gt.j0).tail(n), Vector(-(gi * gt.j1)).tail(n)};
}

Matrix group_exp(const AlgebraElement& x, double s) {
  const double norm1 = (x.mat * s).cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 <= kMaxExponent) return mat_exp(x, s);
  // Long flows: V exp(sD) V^-1 from the eigendecomposition when the eigenbasis
  // is well conditioned. Repeated squaring amplifies rounding by the growth of
  // the intermediate powers, which ruins near-parabolic orbits.
  const Eigen::EigenSolver<Matrix> es(x.mat);
  if (es.info() == Eigen::Success) {
    const Eigen::MatrixXcd v = es.eigenvectors();
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 1e-6 * sv(0)) {
      const Eigen::VectorXcd e = (es.eigenvalues() * s).array().exp();
      const Eigen::MatrixXcd g = v * e.asDiagonal() * v.inverse();
      return g.real();
    }
  }
  const int halvings = static_cast<int>(std::ceil(std::log2(norm1 / (0.5 * kMaxExponent))));
  Matrix g = mat_exp(x, std::ldexp(s, -halvings));
  for (int i = 0; i < halvings; ++i) g = g * g;
  return g;
}

OrientedGeodesic geodesic_in_G(const AlgebraElement& x, double s) {
  require_h(x, "geodesic_in_G");
  const SpaceConfig cfg = SpaceConfig::from_ambient(x.ambient_dim());
  const Matrix g = group_exp(x, s);
  // Endpoints of g c_o are the null directions g(e0 -/+ e1).
  auto endpoint = [&](double sign) {
    const Vector w = g * (basis_vector(cfg.ambient_dim(), 0) + sign * basis_vector(cfg.ambient_dim(), 1));
    return IdealPoint{ambient_to_spatial(w).normalized()};
  };
  return OrientedGeodesic::checked(endpoint(-1.0), endpoint(1.0));
}

PeriodicVerdict classify_periodic(const AlgebraElement& x) {
  require_h(x, "classify_periodic");
  const HSplit split = algebra_split(x);
  const double nx = split.x.norm();
  const double ny = split.y.norm();
  if (nx == 0.0 && ny == 0.0) throw domain_error("classify_periodic: X = 0");

  PeriodicVerdict v;
  if (ny == 0.0) return v;  // pure translation
  v.lambda = split.x.dot(split.y) / (ny * ny);
  v.parallel = (split.x - v.lambda * split.y).norm() <= 1e-9 * std::max(nx, ny);
  if (v.parallel && std::abs(v.lambda) < 1.0 - kFrontierBand) {
    v.periodic = true;
    v.period = 2.0 * kPi / (std::sqrt(1.0 - v.lambda * v.lambda) * ny);
  }
  return v;
}

double curvature_at_base(const AlgebraElement& x, const AlgebraElement& y) {
  require_h(x, "curvature_at_base");
  require_h(y, "curvature_at_base");
  const double sx = x.mat.norm();
  const double sy = y.mat.norm();
  if (sx == 0.0 || sy == 0.0) throw domain_error("curvature_at_base: degenerate plane");
  // K is invariant under rescaling either vector.
  const AlgebraElement a = x * (1.0 / sx);
  const AlgebraElement b = y * (1.0 / sy);
  const double gram = killing_B(a, a) * killing_B(b, b) - killing_B(a, b) * killing_B(a, b);
  if (std::abs(gram) <= 1e-8) throw domain_error("curvature_at_base: degenerate plane");
  const AlgebraElement r = bracket(bracket(a, b), b);
  return -killing_B(r, a) / gram;
}

Matrix gram_at_base(const SpaceConfig& cfg, const MetricChoice& metric) {
  metric.validate(cfg);
  const int n = cfg.n();
  const int m = 2 * n;
  auto quad = [&](const Vector& c) {
    return norm(GTangent::at_base(c.head(n), c.tail(n)), metric);
  };
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i) {
    const Vector ei = Vector::Unit(m, i);
    gram(i, i) = quad(ei);
    for (int j = 0; j < i; ++j) {
      const Vector ej = Vector::Unit(m, j);
      gram(i, j) = gram(j, i) = 0.5 * (quad(ei + ej) - quad(ei) - quad(ej));
    }
  }
  return gram;
}

Matrix adjoint_on_h(const Matrix& g) {
  const SpaceConfig cfg = SpaceConfig::from_ambient(g.rows());
  const int n = cfg.n();
  Matrix out(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    const Vector c = Vector::Unit(2 * n, j);
    const HSplit s = algebra_split(adjoint(g, h_element(c.head(n), c.tail(n))));
    out.col(j).head(n) = s.x;
    out.col(j).tail(n) = s.y;
  }
  return out;
}

InvariantFormDemo invariant_form_dimension(const SpaceConfig& cfg, std::uint64_t seed, int samples,
                                           double threshold) {
  const int n = cfg.n();
  const int m = 2 * n;
  const int unknowns = m * (m + 1) / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  // Symmetric basis E_ab (a <= b).
  std::vector<Matrix> basis;
  basis.reserve(unknowns);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      Matrix e = Matrix::Zero(m, m);
      e(a, b) = e(b, a) = 1.0;
      basis.push_back(std::move(e));
    }
  }

  Matrix constraints = Matrix::Zero(static_cast<Eigen::Index>(samples) * unknowns, unknowns);
  for (int s = 0; s < samples; ++s) {
    Matrix rot = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        rot(i, j) = unif(rng);
        rot(j, i) = -rot(i, j);
      }
    }
    const AlgebraElement w = boost_generator(cfg) * unif(rng) + rotation_generator(rot);
    const Matrix ad = adjoint_on_h(mat_exp(w, 1.0));
    for (int k = 0; k < unknowns; ++k) {
      const Matrix defect = ad.transpose() * basis[static_cast<std::size_t>(k)] * ad -
                            basis[static_cast<std::size_t>(k)];
      int row = s * unknowns;
      for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) constraints(row++, k) = defect(a, b);
      }
    }
  }

  Eigen::JacobiSVD<Matrix> svd(constraints);
  const Vector sv = svd.singularValues();
  InvariantFormDemo demo;
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  for (Eigen::Index i = sv.size() - 1; i >= 0; --i) {
    const double rel = top > 0.0 ? sv(i) / top : 0.0;
    demo.singular_values.push_back(rel);
    if (rel <= threshold) ++demo.dimension;
  }
  return demo;
}

}  // namespace hyperlines
