#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperlines/minkowski.hpp"
#include "hyperlines/sampling.hpp"
#include "oracles.hpp"

using namespace hyperlines;

TEST_CASE("minkowski inner product uses signature (-,+,...,+)") {
  const Vector a = Vector::Unit(4, 0);
  CHECK(inner(a, a) == -1.0);
  Vector b(4);
  b << 2.0, 1.0, -1.0, 3.0;
  CHECK(inner(b, b) == doctest::Approx(oracle::mink(b, b)));
  CHECK(inner(b, b) == doctest::Approx(-4.0 + 1.0 + 1.0 + 9.0));
}

TEST_CASE("generators match the entry-by-entry construction") {
  Sampler s(11);
  for (int n : {1, 2, 3, 6}) {
    const Vector x = s.gaussian(n), y = s.gaussian(n);
    CHECK((h_element(x, y).mat - oracle::h_matrix(x, y)).norm() < 1e-15);
    const Matrix m = h_element(x, y).mat;
    CHECK((m.transpose() * oracle::eta(n + 2) + oracle::eta(n + 2) * m).norm() < 1e-14);
  }
}

TEST_CASE("killing form on h is |x|^2 - |y|^2 and equals half the trace form") {
  Sampler s(12);
  for (int k = 0; k < 100; ++k) {
    const Vector x = s.gaussian(3), y = s.gaussian(3);
    const AlgebraElement X = h_element(x, y);
    CHECK(killing_B(X, X) == doctest::Approx(x.squaredNorm() - y.squaredNorm()).epsilon(1e-12));
    const AlgebraElement Y = s.algebra_element(SpaceConfig(3), 1.0);
    CHECK(killing_B(X, Y) == doctest::Approx(oracle::trace_form(X.mat, Y.mat)).epsilon(1e-12));
  }
}

TEST_CASE("mat_exp against a Taylor oracle and the group law") {
  Sampler s(13);
  const SpaceConfig cfg(2);
  for (int k = 0; k < 50; ++k) {
    const AlgebraElement X = s.algebra_element(cfg, s.uniform(0.0, 3.0));
    const Matrix e = mat_exp(X, 1.0);
    CHECK((e - oracle::taylor_exp(X.mat)).norm() < 1e-11 * std::max(1.0, e.norm()));
    const double a = s.uniform(-1, 1), b = s.uniform(-1, 1);
    CHECK((mat_exp(X, a) * mat_exp(X, b) - mat_exp(X, a + b)).norm() < 1e-11 * mat_exp(X, a + b).norm());
    // stays in O(1, n+1)
    CHECK((e.transpose() * oracle::eta(4) * e - oracle::eta(4)).norm() < 1e-10 * e.squaredNorm());
    CHECK(e(0, 0) >= 1.0);
  }
}

TEST_CASE("rotation in the y direction has period 2 pi") {
  const Vector y = Vector::Unit(2, 0);
  const Matrix r = mat_exp(vertical(y), 2.0 * std::numbers::pi);
  CHECK((r - Matrix::Identity(4, 4)).norm() < 1e-12);
  CHECK((mat_exp(vertical(y), std::numbers::pi) - Matrix::Identity(4, 4)).norm() > 1.0);
}

TEST_CASE("algebra_split recovers x and y and is a projection") {
  Sampler s(14);
  const SpaceConfig cfg(3);
  for (int k = 0; k < 20; ++k) {
    const Vector x = s.gaussian(3), y = s.gaussian(3);
    const AlgebraElement go = boost_generator(cfg) * s.normal() + rotation_generator(s.antisymmetric(3));
    const HSplit sp = algebra_split(h_element(x, y) + go);
    CHECK((sp.x - x).norm() < 1e-14);
    CHECK((sp.y - y).norm() < 1e-14);
    CHECK((sp.go_part.mat - go.mat).norm() < 1e-14);
    CHECK(killing_B(sp.go_part, sp.h_part) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("Ad(exp tZ) on h matches the matrix conjugation") {
  Sampler s(15);
  const SpaceConfig cfg(2);
  for (int k = 0; k < 20; ++k) {
    const Vector x = s.gaussian(2), y = s.gaussian(2);
    const double t = s.uniform(-2, 2);
    const Matrix g = mat_exp(boost_generator(cfg), t);
    const Matrix conj = g * oracle::h_matrix(x, y) * g.inverse();
    const auto [xt, yt] = adZ_flow(t, x, y);
    CHECK((conj - oracle::h_matrix(xt, yt)).norm() < 1e-11 * std::max(1.0, conj.norm()));
  }
}

TEST_CASE("lorentz_frame sends (e0, e1) to (p, u)") {
  Sampler s(16);
  const SpaceConfig cfg(3);
  for (int k = 0; k < 20; ++k) {
    const UnitTangent t = s.unit_tangent(cfg);
    const Matrix g = lorentz_frame(t.point.x, t.dir);
    CHECK((g.col(0) - t.point.x).norm() < 1e-12);
    CHECK((g.col(1) - t.dir).norm() < 1e-12);
    CHECK((g.transpose() * oracle::eta(5) * g - oracle::eta(5)).norm() < 1e-11);
    CHECK(in_identity_component(g));
  }
}

TEST_CASE("algebra membership is enforced") {
  Matrix m = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(AlgebraElement::checked(m), Error);
}
