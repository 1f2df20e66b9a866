#pragma once

// Curves in the line space, sampled on a uniform grid as lifts to the unit
// tangent bundle, and their standard presentations: a family of unit-speed
// geodesics alpha_t(s) = gamma_{v(t)}(s + f(t)) whose base curve
// beta(t) = alpha_t(0) is orthogonal to the directions alpha_t'(0).
//
// For such a presentation the velocity of the curve is represented by the
// Jacobi data (J(0), J'(0)) = (beta'(t), D/dt alpha_t'(0)), so the causal type
// for g1 compares the rate of displacement |beta'| with the rate of variation
// of the directions |D/dt alpha'|.

#include <cstddef>
#include <vector>

#include "hyperlines/boundary.hpp"

namespace hyperlines {

class CurveInG {
 public:
  // At least five samples; every lift a valid unit tangent.
  static CurveInG checked(double h, std::vector<UnitTangent> lifts);
  // Lifts each sample through base_tangent.
  static CurveInG from_pairs(double h, const std::vector<OrientedGeodesic>& pairs);

  double step() const { return h_; }
  std::size_t size() const { return lifts_.size(); }
  int ambient_dim() const { return lifts_.front().ambient_dim(); }
  const UnitTangent& lift(std::size_t i) const { return lifts_[i]; }
  const std::vector<UnitTangent>& lifts() const { return lifts_; }

 private:
  CurveInG(double h, std::vector<UnitTangent> lifts) : h_(h), lifts_(std::move(lifts)) {}
  double h_;
  std::vector<UnitTangent> lifts_;
};

struct StandardPresentation {
  double h = 0.0;
  std::size_t origin = 0;
  std::vector<double> offsets;          // f(t_i), relative to the input lift
  std::vector<UnitTangent> directions;  // (beta(t_i), alpha_{t_i}'(0))

  std::size_t size() const { return offsets.size(); }
};

// RK4 substeps per grid cell.
inline constexpr int kPresentationSubsteps = 10;

// Solves f' = -<psi_t, psi_s> / ||psi_s||^2 from the offset placing beta(t_o) at p.
// p must lie on the geodesic of sample `origin` (distance <= 1e-8).
StandardPresentation standard_presentation(const CurveInG& c, std::size_t origin, const HPoint& p);

// max over interior samples of |<beta', alpha'>| / (1 + |beta'|).
double presentation_residual(const StandardPresentation& sp);

struct PresentationData {
  HTangent beta_dot;
  UnitTangent alpha_dot;
  HTangent d_alpha_dot;
};

PresentationData presentation_data(const StandardPresentation& sp, std::size_t i);

// The tangent vector of the curve at sample i as Jacobi data (beta', D alpha').
GTangent presentation_tangent(const StandardPresentation& sp, std::size_t i);

inline constexpr double kClassifyBand = 1e-7;

// Rate comparison: Spacelike when |D alpha'| < |beta'|, Timelike when larger,
// Null inside the band. The band is scaled by (a^2 + b^2)/(a + b) so that the
// verdict matches classify_norm(norm_g1) exactly.
CausalType causal_classify_g1(const StandardPresentation& sp, std::size_t i, double band = kClassifyBand);

// Orientation of {beta', D alpha', alpha'} in T H^3 (n = 2), det[b1 b2 b3 beta] > 0
// being positive: positive -> Spacelike.
CausalType causal_classify_g0(const StandardPresentation& sp, std::size_t i, double band = kClassifyBand);

// Central difference of the endpoint pairs, projected tangent to each sphere.
BoundaryTangent velocity_boundary(const CurveInG& c, std::size_t i);

}  // namespace hyperlines
