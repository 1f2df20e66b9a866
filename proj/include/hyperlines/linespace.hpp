#pragma once

// The space of oriented geodesics of H^{n+1} as the homogeneous space G/G_o.
//
// An oriented geodesic is stored by its ordered pair of ideal endpoints.
// A tangent vector at a geodesic is stored as orthogonal Jacobi initial data
// (J(0), J'(0)) relative to a chosen unit tangent on it. At the base geodesic
// c_o (through e0 with velocity e1) the velocity of exp(s(x_h + y_v)) c_o is
// J(0) = (0, 0, x), J'(0) = (0, 0, -y): y_v turns e1 towards -y.

#include <cstdint>
#include <vector>

#include "hyperlines/hyperbolic.hpp"

namespace hyperlines {

struct OrientedGeodesic {
  IdealPoint minus;
  IdealPoint plus;

  // Rejects |minus - plus| < 1e-8.
  static OrientedGeodesic checked(IdealPoint minus, IdealPoint plus);
  static OrientedGeodesic base(const SpaceConfig& cfg);  // c_o = (-e1, e1)

  int boundary_dim() const { return minus.boundary_dim(); }
};

// Sum of the chordal distances of the endpoints.
double geodesic_distance_proxy(const OrientedGeodesic& a, const OrientedGeodesic& b);

struct GTangent {
  UnitTangent base;
  Vector j0;  // J(0)
  Vector j1;  // J'(0)

  static GTangent checked(UnitTangent base, Vector j0, Vector j1);
  // x_h + y_v at c_o.
  static GTangent at_base(const Vector& x, const Vector& y);

  int ambient_dim() const { return base.ambient_dim(); }
  // |J0|^2 + |J1|^2, the reference scale of the norms.
  double scale() const;
};

enum class CausalType { Spacelike, Timelike, Null };
const char* to_string(CausalType type);

class MetricChoice {
 public:
  enum class Kind { G1, G0, Combo };

  static MetricChoice g1() { return MetricChoice(Kind::G1, 0.0, 1.0); }
  static MetricChoice g0() { return MetricChoice(Kind::G0, 1.0, 0.0); }
  // lambda g0 + mu g1.
  static MetricChoice combo(double lambda, double mu);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  // Feature error unless the metric exists for this n.
  void validate(const SpaceConfig& cfg) const;

 private:
  MetricChoice(Kind k, double l, double m) : kind_(k), lambda_(l), mu_(m) {}
  Kind kind_;
  double lambda_;
  double mu_;
};

OrientedGeodesic from_unit_tangent(const UnitTangent& t0);
// Canonical unit tangent: with u = e0 + minus and w = e0 + plus,
// point = (u + w)/|plus - minus| and dir = (w - u)/|plus - minus|. The point is
// the foot of the perpendicular from e0 (dir has no e0 component).
UnitTangent base_tangent(const OrientedGeodesic& geo);

// Minitwistor chart on T S^n at e0. Vectors are spatial (n+1)-vectors of e0^perp.
struct MinitwistorCoords {
  Vector v;  // unit direction
  Vector x;  // translation, orthogonal to v
};

OrientedGeodesic minitwistor_F(const Vector& v, const Vector& x);
MinitwistorCoords minitwistor_F_inv(const OrientedGeodesic& geo);

double norm_g1(const GTangent& gt);
// n = 2 only: det[J0 J1 u p], i.e. <ix, y> in h coordinates.
double norm_g0(const GTangent& gt);
double norm_combo(const GTangent& gt, double lambda, double mu);
double norm(const GTangent& gt, const MetricChoice& metric);

// Sign of a metric norm with the null band |value| <= band * scale.
inline constexpr double kNullBand = 1e-7;
CausalType classify_norm(double value, double scale, double band = kNullBand);

GTangent push_forward(const Matrix& g, const GTangent& gt);

// h coordinates (x, y) of gt after moving its base to (e0, e1) with lorentz_frame.
std::pair<Vector, Vector> h_coordinates(const GTangent& gt);

// exp(sX) for X in h, split into squarings when ||X|| |s| exceeds the exponent guard.
Matrix group_exp(const AlgebraElement& x, double s);
// s -> exp_G(sX) c_o.
OrientedGeodesic geodesic_in_G(const AlgebraElement& x, double s);

struct PeriodicVerdict {
  bool periodic = false;
  double period = 0.0;  // 2 pi / (sqrt(1 - lambda^2) |y|) when periodic
  double lambda = 0.0;  // ratio x = lambda y when x and y are parallel
  bool parallel = false;
};
// Relative band around |lambda| = 1 classified as the (non-periodic) frontier.
inline constexpr double kFrontierBand = 1e-9;
PeriodicVerdict classify_periodic(const AlgebraElement& x);

// Sectional curvature of span{X, Y} at c_o for g1.
double curvature_at_base(const AlgebraElement& x, const AlgebraElement& y);

// Gram matrix on h in the basis (x_h units, y_v units).
Matrix gram_at_base(const SpaceConfig& cfg, const MetricChoice& metric);
// Matrix of Ad(g) restricted to h in (x, y) coordinates; g must fix c_o.
Matrix adjoint_on_h(const Matrix& g);

struct InvariantFormDemo {
  int dimension = 0;
  std::vector<double> singular_values;  // ascending, normalized by the largest
};
// Dimension of the space of symmetric forms on h invariant under random
// elements of G_o, from the rank of the stacked invariance constraints.
InvariantFormDemo invariant_form_dimension(const SpaceConfig& cfg, std::uint64_t seed, int samples = 6,
                                           double threshold = 1e-6);

}  // namespace hyperlines
