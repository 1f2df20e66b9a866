#pragma once

// Seeded random inputs and the named curve families used by tests, fixtures
// and the verify command.

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "hyperlines/curves.hpp"

namespace hyperlines {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  Vector gaussian(int dim, double scale = 1.0);
  Vector unit_vector(int dim);
  // Unit vector orthogonal to `to` (which must be a unit vector).
  Vector orthogonal_unit(const Vector& to);
  // Antisymmetric n x n matrix with standard normal entries times scale.
  Matrix antisymmetric(int n, double scale = 1.0);

  // Random so(1, n+1) element normalized to Frobenius norm `norm`.
  AlgebraElement algebra_element(const SpaceConfig& cfg, double norm);
  // exp(X) with |X|_F uniform in [0, max_norm].
  Matrix group_element(const SpaceConfig& cfg, double max_norm = 2.0);
  // exp(aZ + rotation): fixes the base geodesic.
  Matrix isotropy_element(const SpaceConfig& cfg, double max_norm = 2.0);

  // (p, v) at distance <= max_dist from e0.
  UnitTangent unit_tangent(const SpaceConfig& cfg, double max_dist = 1.5);
  OrientedGeodesic geodesic(const SpaceConfig& cfg);
  // at_base(x, y) pushed to a random geodesic.
  GTangent gtangent(const SpaceConfig& cfg);
  BoundaryTangent boundary_tangent(const SpaceConfig& cfg);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a of a name; per-check seeds are seed + hash(name).
std::uint64_t name_hash(const std::string& name);

// Samples t_i = (i - (count - 1)/2) h, so the middle sample sits at t = 0.
struct Grid {
  double h = 1e-3;
  std::size_t count = 41;

  double t(std::size_t i) const;
  std::size_t middle() const { return count / 2; }
};

// Lifts (g(t) e0, g(t) e1) of t -> g(t) c_o.
CurveInG curve_from_path(const std::function<Matrix(double)>& g, const Grid& grid);

// exp(t y_v) c_o: rotation of the base geodesic about e0.
CurveInG rotation_family(const Vector& y, const Grid& grid);
// Same geodesics, each lift shifted by sin t along itself.
CurveInG relifted_rotation_family(const Vector& y, const Grid& grid);
// exp(t x_h) c_o.
CurveInG translation_family(const Vector& x, const Grid& grid);
// exp(t (x_h + x_v)) c_o: an orbit tangent to the null directions.
CurveInG null_family(const Vector& x, const Grid& grid);
// exp(t (x_h + y_v)) c_o.
CurveInG h_family(const Vector& x, const Vector& y, const Grid& grid);
// exp(A0 + t A1 + t^2 A2) c_o with random A_k.
CurveInG random_curve(Sampler& s, const SpaceConfig& cfg, const Grid& grid);

}  // namespace hyperlines
