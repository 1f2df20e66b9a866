#pragma once

// The pair model (S^n x S^n) minus the diagonal. G acts on S^n by directly
// conformal maps; the map sending a geodesic to its endpoints is an isometry
// for g1 when the pairs carry the metric with norm
//
//   ||(x, y)||_(p,q) = 4 <T_{p,q} x, y> / |q - p|^2,
//
// T_{p,q} being the reflection across the hyperplane orthogonal to p - q.

#include "hyperlines/linespace.hpp"

namespace hyperlines {

// The endpoint pair is the canonical storage of an oriented geodesic, so the
// two models share one type.
using BoundaryPair = OrientedGeodesic;

struct BoundaryTangent {
  BoundaryPair at;
  Vector xi_minus;  // tangent to S^n at at.minus
  Vector xi_plus;   // tangent to S^n at at.plus

  static BoundaryTangent checked(BoundaryPair at, Vector xi_minus, Vector xi_plus);
  static BoundaryTangent zero(BoundaryPair at);
  double scale() const { return xi_minus.squaredNorm() + xi_plus.squaredNorm(); }
};

Vector reflection_T(const IdealPoint& p, const IdealPoint& q, const Vector& x);

double norm_mss(const BoundaryTangent& bt);
// Polarization of norm_mss.
double mss_bilinear(const BoundaryTangent& a, const BoundaryTangent& b);

// The conformal map of S^n induced by g: spatial part of g(e0 + z) / (g(e0 + z))_0.
IdealPoint mobius_action(const Matrix& g, const IdealPoint& z);
// Its differential at z applied to xi (tangent at z).
Vector d_mobius(const Matrix& g, const IdealPoint& z, const Vector& xi);

BoundaryPair pair_action(const Matrix& g, const BoundaryPair& bp);
BoundaryTangent d_pair_action(const Matrix& g, const BoundaryTangent& bt);

// d(endpoints) of the tangent represented by Jacobi data. At the base
// geodesic, (J(0), J'(0)) = (x, y) maps to (x - y, x + y).
BoundaryTangent jacobi_to_boundary(const GTangent& gt);

}  // namespace hyperlines
