#pragma once

// Reference computations written directly from the definitions with plain
// Eigen matrices. Nothing here calls into the library.

#include <Eigen/Dense>
#include <cmath>

namespace oracle {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline Mat eta(int d) {
  Mat m = Mat::Identity(d, d);
  m(0, 0) = -1.0;
  return m;
}

inline double mink(const Vec& a, const Vec& b) { return -a(0) * b(0) + a.tail(a.size() - 1).dot(b.tail(b.size() - 1)); }

// x_h + y_v written out entry by entry: boost part in row/column 0, the
// rotation part couples e1 with e_{2+k}.
inline Mat h_matrix(const Vec& x, const Vec& y) {
  const int n = static_cast<int>(x.size());
  Mat m = Mat::Zero(n + 2, n + 2);
  for (int k = 0; k < n; ++k) {
    m(0, 2 + k) = m(2 + k, 0) = x(k);
    m(1, 2 + k) = y(k);
    m(2 + k, 1) = -y(k);
  }
  return m;
}

// g1 on h is half the trace form: tr((x_h)^2) = 2|x|^2, tr((y_v)^2) = -2|y|^2.
inline double trace_form(const Mat& a, const Mat& b) { return 0.5 * (a * b).trace(); }

// Sectional curvature of a symmetric space from the bracket: R(X,Y)Z = -[[X,Y],Z].
inline double bracket_curvature(const Mat& x, const Mat& y) {
  auto br = [](const Mat& a, const Mat& b) { return Mat(a * b - b * a); };
  const double q = trace_form(x, x) * trace_form(y, y) - trace_form(x, y) * trace_form(x, y);
  return -trace_form(br(br(x, y), y), x) / q;
}

// exp by a long Taylor sum on a scaled matrix, then squaring. Only for small norms.
inline Mat taylor_exp(const Mat& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const Mat s = a / std::pow(2.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * s / k;
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Endpoints of t -> cosh t p + sinh t v seen from e0: the limit of x/x_0 - e0.
inline Vec endpoint_limit(const Vec& p, const Vec& v, double t) {
  const Vec g = std::cosh(t) * p + std::sinh(t) * v;
  return (g / g(0)).tail(g.size() - 1);
}

// Octonions as Cayley-Dickson doubles of quaternions, quaternions as
// (w, x, y, z). Built without the library's product.
inline Eigen::Vector4d qmul(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  return {a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3), a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2),
          a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1), a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0)};
}

inline Eigen::Vector4d qconj(const Eigen::Vector4d& a) { return {a(0), -a(1), -a(2), -a(3)}; }

inline Vec omul(const Vec& u, const Vec& v) {
  const Eigen::Vector4d a = u.head(4), b = u.tail(4), c = v.head(4), d = v.tail(4);
  Vec out(8);
  out.head(4) = qmul(a, c) - qmul(qconj(d), b);
  out.tail(4) = qmul(d, a) + qmul(b, qconj(c));
  return out;
}

}  // namespace oracle
