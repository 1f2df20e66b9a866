#pragma once

// The hyperboloid model H^{n+1} = { x : <x,x> = -1, x0 > 0 } of curvature -1.

#include <cstddef>
#include <span>
#include <utility>

#include "hyperlines/minkowski.hpp"

namespace hyperlines {

// |t| bound for geodesic flows (cosh overflow guard).
inline constexpr double kMaxGeodesicTime = 50.0;

struct HPoint {
  Vector x;

  static HPoint checked(Vector x);
  static HPoint origin(const SpaceConfig& cfg);
  // Rescales onto <x,x> = -1.
  static HPoint normalized(const Vector& x);

  int ambient_dim() const { return static_cast<int>(x.size()); }
};

struct HTangent {
  HPoint base;
  Vector vec;

  static HTangent checked(HPoint base, Vector vec);
  // Drops the normal component: vec + <vec, base> base.
  static HTangent projected(HPoint base, const Vector& vec);

  double norm() const;
};

struct UnitTangent {
  HPoint point;
  Vector dir;

  static UnitTangent checked(HPoint point, Vector dir);
  // Re-projects (point, dir) onto the unit tangent bundle.
  static UnitTangent normalized(const Vector& point, const Vector& dir);
  // (e0, e1): the base geodesic.
  static UnitTangent base(const SpaceConfig& cfg);

  int ambient_dim() const { return point.ambient_dim(); }
};

// A point of the ideal boundary S^n, stored as a unit vector of e0^perp = R^{n+1}.
struct IdealPoint {
  Vector dir;

  static IdealPoint checked(Vector dir);
  int boundary_dim() const { return static_cast<int>(dir.size()); }
};

// Embeds a spatial (n+1)-vector as (0, v) in R^{n+2}.
Vector spatial_to_ambient(const Vector& v);
// Drops coordinate 0.
Vector ambient_to_spatial(const Vector& v);

UnitTangent geodesic_point(const UnitTangent& t0, double t);

double distance(const HPoint& p, const HPoint& q);

HPoint exp_map(const HTangent& w);
HTangent log_map(const HPoint& p, const HPoint& q);

// Parallel transport of w (tangent at t0.point) to gamma(t).
HTangent parallel_transport(const UnitTangent& t0, double t, const HTangent& w);

struct CovariantDerivative {
  HTangent value;
  bool one_sided = false;  // true at the two ends of the grid (O(h) stencil)
};

// D/dt of a sampled tangent field along a sampled curve on a uniform grid of
// step h: finite difference of the ambient field, projected to the tangent space.
CovariantDerivative covariant_derivative(std::span<const Vector> curve, std::span<const Vector> field,
                                         double h, std::size_t i);

struct JacobiState {
  HTangent value;       // J(t)
  HTangent derivative;  // J'(t)
};

// Orthogonal Jacobi field along the geodesic of t0 with J(0) = j0, J'(0) = j1.
JacobiState jacobi_eval(const UnitTangent& t0, const HTangent& j0, const HTangent& j1, double t);

// (gamma(-inf), gamma(+inf)).
std::pair<IdealPoint, IdealPoint> ideal_endpoints(const UnitTangent& t0);

}  // namespace hyperlines
