#include "hyperlines/sampling.hpp"

#include <cmath>

namespace hyperlines {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

Vector Sampler::gaussian(int dim, double scale) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = scale * normal();
  return v;
}

Vector Sampler::unit_vector(int dim) {
  for (;;) {
    Vector v = gaussian(dim);
    const double len = v.norm();
    if (len > 1e-3) return v / len;
  }
}

Vector Sampler::orthogonal_unit(const Vector& to) {
  for (;;) {
    Vector v = gaussian(static_cast<int>(to.size()));
    v -= v.dot(to) * to;
    const double len = v.norm();
    if (len > 1e-3) return v / len;
  }
}

Matrix Sampler::antisymmetric(int n, double scale) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = scale * normal();
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

AlgebraElement Sampler::algebra_element(const SpaceConfig& cfg, double norm) {
  const int d = cfg.ambient_dim();
  Matrix m = Matrix::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const double b = normal();
    m(0, k) = b;
    m(k, 0) = b;
  }
  m.bottomRightCorner(d - 1, d - 1) = antisymmetric(d - 1);
  const double f = m.norm();
  return AlgebraElement{f > 0.0 ? Matrix(m * (norm / f)) : m};
}

Matrix Sampler::group_element(const SpaceConfig& cfg, double max_norm) {
  return mat_exp(algebra_element(cfg, uniform(0.0, max_norm)), 1.0);
}

Matrix Sampler::isotropy_element(const SpaceConfig& cfg, double max_norm) {
  AlgebraElement x = boost_generator(cfg) * normal();
  if (cfg.n() >= 2) x = x + rotation_generator(antisymmetric(cfg.n()));
  const double f = x.mat.norm();
  const double target = uniform(0.0, max_norm);
  if (f > 0.0) x = x * (target / f);
  return mat_exp(x, 1.0);
}

UnitTangent Sampler::unit_tangent(const SpaceConfig& cfg, double max_dist) {
  const HPoint o = HPoint::origin(cfg);
  Vector w = Vector::Zero(cfg.ambient_dim());
  w.tail(cfg.boundary_dim()) = unit_vector(cfg.boundary_dim()) * uniform(0.0, max_dist);
  const HPoint p = exp_map(HTangent{o, w});
  const Vector raw = spatial_to_ambient(unit_vector(cfg.boundary_dim()));
  return UnitTangent::normalized(p.x, raw + inner(raw, p.x) * p.x);
}

OrientedGeodesic Sampler::geodesic(const SpaceConfig& cfg) { return from_unit_tangent(unit_tangent(cfg)); }

GTangent Sampler::gtangent(const SpaceConfig& cfg) {
  const GTangent at_base = GTangent::at_base(gaussian(cfg.n()), gaussian(cfg.n()));
  return push_forward(group_element(cfg), at_base);
}

BoundaryTangent Sampler::boundary_tangent(const SpaceConfig& cfg) {
  const OrientedGeodesic g = geodesic(cfg);
  Vector a = gaussian(cfg.boundary_dim());
  Vector b = gaussian(cfg.boundary_dim());
  a -= a.dot(g.minus.dir) * g.minus.dir;
  b -= b.dot(g.plus.dir) * g.plus.dir;
  return BoundaryTangent{g, a, b};
}

std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double Grid::t(std::size_t i) const {
  return (static_cast<double>(i) - static_cast<double>(count - 1) / 2.0) * h;
}

CurveInG curve_from_path(const std::function<Matrix(double)>& g, const Grid& grid) {
  std::vector<UnitTangent> lifts;
  lifts.reserve(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const Matrix m = g(grid.t(i));
    lifts.push_back(UnitTangent::normalized(m.col(0), m.col(1)));
  }
  return CurveInG::checked(grid.h, std::move(lifts));
}

CurveInG rotation_family(const Vector& y, const Grid& grid) {
  const AlgebraElement v = vertical(y);
  return curve_from_path([&](double t) { return mat_exp(v, t); }, grid);
}

CurveInG relifted_rotation_family(const Vector& y, const Grid& grid) {
  const CurveInG base = rotation_family(y, grid);
  std::vector<UnitTangent> lifts;
  lifts.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) lifts.push_back(geodesic_point(base.lift(i), std::sin(grid.t(i))));
  return CurveInG::checked(grid.h, std::move(lifts));
}

CurveInG translation_family(const Vector& x, const Grid& grid) {
  const AlgebraElement a = horizontal(x);
  return curve_from_path([&](double t) { return mat_exp(a, t); }, grid);
}

CurveInG null_family(const Vector& x, const Grid& grid) { return h_family(x, x, grid); }

CurveInG h_family(const Vector& x, const Vector& y, const Grid& grid) {
  const AlgebraElement a = h_element(x, y);
  return curve_from_path([&](double t) { return group_exp(a, t); }, grid);
}

CurveInG random_curve(Sampler& s, const SpaceConfig& cfg, const Grid& grid) {
  const AlgebraElement a0 = s.algebra_element(cfg, s.uniform(0.0, 1.5));
  const AlgebraElement a1 = s.algebra_element(cfg, s.uniform(0.2, 2.0));
  const AlgebraElement a2 = s.algebra_element(cfg, s.uniform(0.0, 1.0));
  return curve_from_path([&](double t) { return mat_exp(a0 + a1 * t + a2 * (t * t), 1.0); }, grid);
}

}  // namespace hyperlines
