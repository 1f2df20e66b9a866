#pragma once

// Lorentz linear algebra on R^{n+2} with the form -x0^2 + x1^2 + ... + x_{n+1}^2.
//
// Coordinate 0 is time. The Lie algebra so(1,n+1) is stored as plain
// (n+2)x(n+2) matrices; the isotropy algebra of the base geodesic (through e0
// with velocity e1) is spanned by the boost Z in the (e0,e1)-plane and the
// rotations of span{e2,...,e_{n+1}}. Its B-orthogonal complement is
// parametrized by pairs (x, y) of n-vectors through x_h + y_v.

#include <Eigen/Dense>

#include <utility>

#include "hyperlines/errors.hpp"

namespace hyperlines {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Dimension parameter: the line space has dimension 2n, the hyperbolic space
// is H^{n+1} and the ambient Minkowski space is R^{n+2}.
class SpaceConfig {
 public:
  explicit SpaceConfig(int n);

  int n() const { return n_; }
  int ambient_dim() const { return n_ + 2; }
  int boundary_dim() const { return n_ + 1; }
  int line_space_dim() const { return 2 * n_; }

  // Throws a feature error unless n == required.
  void require(int required, const char* feature) const;

  static SpaceConfig from_ambient(Eigen::Index ambient_dim);

 private:
  int n_;
};

// Largest absolute entry; the reference scale for relative tolerances.
double max_abs(const Vector& v);
double max_abs(const Matrix& m);
inline double rel_tol(double tol, double scale) { return tol * (scale > 1.0 ? scale : 1.0); }

Matrix minkowski_metric(int ambient_dim);
Vector basis_vector(int ambient_dim, int index);

double inner(const Vector& a, const Vector& b);

// An element of so(1,n+1): mat^T eta + eta mat = 0.
struct AlgebraElement {
  Matrix mat;

  // Validates membership to 1e-12 relative to the largest entry.
  static AlgebraElement checked(Matrix m);
  static AlgebraElement zero(int ambient_dim);

  int ambient_dim() const { return static_cast<int>(mat.rows()); }

  AlgebraElement operator+(const AlgebraElement& o) const { return {mat + o.mat}; }
  AlgebraElement operator-(const AlgebraElement& o) const { return {mat - o.mat}; }
  AlgebraElement operator*(double s) const { return {mat * s}; }
};

// x_h: boost mixing e0 with e_{2+k} (weights x_k).
AlgebraElement horizontal(const Vector& x);
// y_v: rotation mixing e1 with e_{2+k} (weights y_k).
AlgebraElement vertical(const Vector& y);
AlgebraElement h_element(const Vector& x, const Vector& y);
// Z = diag(R, 0_n), the boost along the base geodesic.
AlgebraElement boost_generator(const SpaceConfig& cfg);
// diag(0_2, A) for antisymmetric A in so(n).
AlgebraElement rotation_generator(const Matrix& a);

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

// B(X,Y) = tr(XY)/2.
double killing_B(const AlgebraElement& a, const AlgebraElement& b);

// exp(tX) by scaling and squaring. Requires ||X||_1 |t| <= kMaxExponent.
inline constexpr double kMaxExponent = 50.0;
Matrix mat_exp(const AlgebraElement& x, double t);

struct HSplit {
  AlgebraElement go_part;
  AlgebraElement h_part;
  Vector x;
  Vector y;
};

HSplit algebra_split(const AlgebraElement& x);

// Ad(exp(tZ)) on the complement in (x, y) coordinates.
std::pair<Vector, Vector> adZ_flow(double t, const Vector& x, const Vector& y);

// g X g^{-1}.
AlgebraElement adjoint(const Matrix& g, const AlgebraElement& x);

// eta g^T eta.
Matrix lorentz_inverse(const Matrix& g);

// True when g^T eta g = eta to tol (relative to |g|^2), det g > 0 and (g e0)_0 > 0.
bool in_identity_component(const Matrix& g, double tol = 1e-9);

// g in the identity component with g e0 = p and g e1 = u. The remaining columns
// come from Gram-Schmidt over e0, e1, ..., e_{n+1} in index order, skipping
// candidates whose residual is below 1e-8; the last column is flipped if needed
// so that det g > 0.
Matrix lorentz_frame(const Vector& p, const Vector& u);

}  // namespace hyperlines
