#include "hyperlines/minkowski.hpp"

#include <cmath>
#include <string>

namespace hyperlines {

SpaceConfig::SpaceConfig(int n) : n_(n) {
  if (n < 1) throw domain_error("n must be >= 1, got " + std::to_string(n));
}

void SpaceConfig::require(int required, const char* feature) const {
  if (n_ != required) {
    throw feature_error(std::string(feature) + " requires n=" + std::to_string(required) +
                        " (got n=" + std::to_string(n_) + ")");
  }
}

SpaceConfig SpaceConfig::from_ambient(Eigen::Index ambient_dim) {
  if (ambient_dim < 3) {
    throw dimension_error("ambient dimension must be >= 3, got " + std::to_string(ambient_dim));
  }
  return SpaceConfig(static_cast<int>(ambient_dim) - 2);
}

double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }
double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix minkowski_metric(int ambient_dim) {
  Matrix eta = Matrix::Identity(ambient_dim, ambient_dim);
  eta(0, 0) = -1.0;
  return eta;
}

Vector basis_vector(int ambient_dim, int index) {
  Vector e = Vector::Zero(ambient_dim);
  e(index) = 1.0;
  return e;
}

double inner(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw dimension_error("inner: length mismatch " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  if (a.size() == 0) return 0.0;
  return -a(0) * b(0) + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

namespace {

Matrix eta_of(const Matrix& m) { return minkowski_metric(static_cast<int>(m.rows())); }

void require_same_dim(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.mat.rows() != b.mat.rows()) throw dimension_error("algebra elements of different size");
}

}  // namespace

AlgebraElement AlgebraElement::checked(Matrix m) {
  if (m.rows() != m.cols() || m.rows() < 3) throw dimension_error("so(1,n+1) needs a square matrix, size >= 3");
  const Matrix eta = eta_of(m);
  const double defect = max_abs(Matrix(m.transpose() * eta + eta * m));
  if (defect > rel_tol(1e-12, max_abs(m))) {
    throw domain_error("matrix is not in so(1,n+1): defect " + std::to_string(defect));
  }
  return AlgebraElement{std::move(m)};
}

AlgebraElement AlgebraElement::zero(int ambient_dim) {
  return {Matrix::Zero(ambient_dim, ambient_dim)};
}

AlgebraElement horizontal(const Vector& x) {
  const auto n = x.size();
  if (n < 1) throw dimension_error("x_h needs n >= 1");
  Matrix m = Matrix::Zero(n + 2, n + 2);
  m.block(0, 2, 1, n) = x.transpose();
  m.block(2, 0, n, 1) = x;
  return {m};
}

AlgebraElement vertical(const Vector& y) {
  const auto n = y.size();
  if (n < 1) throw dimension_error("y_v needs n >= 1");
  Matrix m = Matrix::Zero(n + 2, n + 2);
  m.block(1, 2, 1, n) = y.transpose();
  m.block(2, 1, n, 1) = -y;
  return {m};
}

AlgebraElement h_element(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw dimension_error("x and y must have the same length");
  return horizontal(x) + vertical(y);
}

AlgebraElement boost_generator(const SpaceConfig& cfg) {
  Matrix m = Matrix::Zero(cfg.ambient_dim(), cfg.ambient_dim());
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return {m};
}

AlgebraElement rotation_generator(const Matrix& a) {
  if (a.rows() != a.cols()) throw dimension_error("rotation block must be square");
  if (max_abs(Matrix(a + a.transpose())) > rel_tol(1e-12, max_abs(a))) {
    throw domain_error("rotation block must be antisymmetric");
  }
  const auto n = a.rows();
  Matrix m = Matrix::Zero(n + 2, n + 2);
  m.block(2, 2, n, n) = a;
  return {m};
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_dim(a, b);
  return {a.mat * b.mat - b.mat * a.mat};
}

double killing_B(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_dim(a, b);
  // tr(AB) without forming the product.
  return 0.5 * a.mat.cwiseProduct(b.mat.transpose()).sum();
}

Matrix mat_exp(const AlgebraElement& x, double t) {
  const auto dim = x.mat.rows();
  if (t == 0.0 || max_abs(x.mat) == 0.0) return Matrix::Identity(dim, dim);

  const Matrix a = x.mat * t;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 > kMaxExponent) {
    throw range_error("mat_exp: ||X|| |t| = " + std::to_string(norm1) + " exceeds " +
                      std::to_string(kMaxExponent));
  }

  // Scale to norm <= 1/2; the degree-18 Taylor remainder is then below 1e-24.
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Matrix scaled = a / std::ldexp(1.0, squarings);

  Matrix result = Matrix::Identity(dim, dim);
  Matrix term = Matrix::Identity(dim, dim);
  for (int k = 1; k <= 18; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

HSplit algebra_split(const AlgebraElement& x) {
  const AlgebraElement checked = AlgebraElement::checked(x.mat);
  const auto dim = checked.mat.rows();
  const auto n = dim - 2;

  Vector xs = checked.mat.block(0, 2, 1, n).transpose();
  Vector ys = checked.mat.block(1, 2, 1, n).transpose();
  AlgebraElement h = h_element(xs, ys);
  AlgebraElement go = checked - h;
  return HSplit{std::move(go), std::move(h), std::move(xs), std::move(ys)};
}

std::pair<Vector, Vector> adZ_flow(double t, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw dimension_error("adZ_flow: x and y differ in length");
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  return {c * x + s * y, s * x + c * y};
}

Matrix lorentz_inverse(const Matrix& g) {
  const Matrix eta = eta_of(g);
  return eta * g.transpose() * eta;
}

AlgebraElement adjoint(const Matrix& g, const AlgebraElement& x) {
  if (g.rows() != x.mat.rows()) throw dimension_error("adjoint: size mismatch");
  return {g * x.mat * lorentz_inverse(g)};
}

bool in_identity_component(const Matrix& g, double tol) {
  if (g.rows() != g.cols() || g.rows() < 3) return false;
  const Matrix eta = eta_of(g);
  const double scale = max_abs(g);
  const double defect = max_abs(Matrix(g.transpose() * eta * g - eta));
  return defect <= rel_tol(tol, scale * scale) && g.determinant() > 0.0 && g(0, 0) > 0.0;
}

Matrix lorentz_frame(const Vector& p, const Vector& u) {
  if (p.size() != u.size() || p.size() < 3) throw dimension_error("lorentz_frame: bad sizes");
  const double scale = std::max(max_abs(p), max_abs(u));
  const double tol = rel_tol(1e-10, scale * scale);
  if (std::abs(inner(p, p) + 1.0) > tol || p(0) <= 0.0) throw domain_error("lorentz_frame: p is not on H");
  if (std::abs(inner(u, u) - 1.0) > tol) throw domain_error("lorentz_frame: u is not a unit vector");
  if (std::abs(inner(p, u)) > tol) throw domain_error("lorentz_frame: u is not tangent at p");

  const auto dim = p.size();
  Matrix g(dim, dim);
  g.col(0) = p;
  g.col(1) = u;
  Eigen::Index filled = 2;

  // Orthonormal complement of span{p, u} w.r.t. the Lorentz form. The
  // complement is spacelike, so the form restricted to it is positive.
  auto project_out = [&](Vector w) {
    for (int pass = 0; pass < 2; ++pass) {
      w += inner(w, p) * p;  // <p,p> = -1
      for (Eigen::Index j = 1; j < filled; ++j) w -= inner(w, g.col(j)) * Vector(g.col(j));
    }
    return w;
  };

  for (Eigen::Index k = 0; k < dim && filled < dim; ++k) {
    Vector w = project_out(basis_vector(static_cast<int>(dim), static_cast<int>(k)));
    const double norm2 = inner(w, w);
    if (norm2 <= 0.0 || std::sqrt(norm2) < 1e-8) continue;
    g.col(filled++) = w / std::sqrt(norm2);
  }
  if (filled < dim) throw domain_error("lorentz_frame: degenerate input");
  if (g.determinant() < 0.0) g.col(dim - 1) *= -1.0;
  return g;
}

}  // namespace hyperlines
