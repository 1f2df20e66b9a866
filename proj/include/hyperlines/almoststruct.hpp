#pragma once

// Almost complex structures on the line space.
//
//  * n = 2: j_o(z, w) = (iz, iw) on h = C x C, transported by G.
//  * n = 6: J_(p,q)(x, y) = (p x x, T_{p,q}(p x T_{p,q} y)) on (S^6 x S^6) minus
//    the diagonal, built from the octonionic cross product on R^7 = Im O.
//
// Octonions use Cayley-Dickson doubling of the quaternions with e4 as the
// doubling unit: e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.

#include <array>
#include <cstddef>
#include <optional>

#include "hyperlines/boundary.hpp"

namespace hyperlines {

struct Octonion {
  std::array<double, 8> c{};  // (1, e1, ..., e7)

  static Octonion real(double r);
  static Octonion unit(int k);  // e_k, k in 0..7
  static Octonion from_imaginary(const Vector& v);

  Vector imaginary() const;
  Octonion conj() const;
  double norm() const;

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator*(double s) const;
};

Octonion oct_mul(const Octonion& a, const Octonion& b);

// Im(uv) for imaginary u, v in R^7.
Vector cross7(const Vector& u, const Vector& v);

// j_p(x) = p x x on T_p S^6.
Vector j_sphere(const IdealPoint& p, const Vector& x);
// T_{p,q} j_p T_{p,q} on T_q S^6.
Vector j_pq(const IdealPoint& p, const IdealPoint& q, const Vector& y);
BoundaryTangent big_J(const BoundaryTangent& bt);

// Applies a linear map on the (x, y) coordinates of h at the base geodesic,
// transported to gt's base with lorentz_frame.
GTangent apply_h_operator(const GTangent& gt, const Matrix& op);
// i (+) i on R^2 x R^2, with i(a, b) = (-b, a).
Matrix complex_structure_on_h();
GTangent j0_G3(const GTangent& gt);

// Max over t in [0, T] of the relative ambient deviation between
// op(push(exp(tX)) gt0) and push(exp(tX)) op(gt0). Vanishes for a G-invariant
// structure; `op` defaults to j_o.
double kahler_parallel_check(const AlgebraElement& x, const GTangent& gt0, double T, int steps,
                             const std::optional<Matrix>& op = std::nullopt);

// Finite-difference Nijenhuis tensor of J at a pair, with ambient extensions
// (tangential projections of the constant fields xi, eta).
BoundaryTangent nijenhuis(const BoundaryPair& at, const BoundaryTangent& xi, const BoundaryTangent& eta, double h);

// Same construction for j on S^6 alone.
Vector sphere_nijenhuis(const IdealPoint& p, const Vector& x, const Vector& y, double h);

struct NijenhuisCertificate {
  double norm_h = 0.0;         // |N| with step h
  double norm_half = 0.0;      // |N| with step h/2
  double extrapolated = 0.0;   // |(4 N_{h/2} - N_h)/3|
  double step_change = 0.0;    // |N_h - N_{h/2}|
  double ratio = 0.0;          // |N_h - N_{h/2}| / |N_{h/2} - N_{h/4}|
  bool converged = false;      // step_change small relative to the extrapolated value
};

NijenhuisCertificate nijenhuis_certificate(const BoundaryPair& at, const BoundaryTangent& xi,
                                           const BoundaryTangent& eta, double h = 1e-4);

// |d_pair_action(g) J bt - J d_pair_action(g) bt| / sqrt(scale(bt)).
double equivariance_defect(const Matrix& g, const BoundaryTangent& bt);

}  // namespace hyperlines
