#include <cmath>
#include <vector>

#include "doctest.h"
#include "hyperlines/hyperbolic.hpp"
#include "hyperlines/sampling.hpp"
#include "oracles.hpp"

using namespace hyperlines;

TEST_CASE("geodesic_point from (e0, e1)") {
  const UnitTangent t0 = UnitTangent::base(SpaceConfig(2));
  const UnitTangent t = geodesic_point(t0, 1.0);
  CHECK(t.point.x(0) == doctest::Approx(std::cosh(1.0)));
  CHECK(t.point.x(1) == doctest::Approx(std::sinh(1.0)));
  CHECK(t.dir(0) == doctest::Approx(std::sinh(1.0)));
  CHECK(t.dir(1) == doctest::Approx(std::cosh(1.0)));
}

TEST_CASE("geodesics stay on the hyperboloid up to |t| = 20") {
  Sampler s(21);
  for (int k = 0; k < 50; ++k) {
    const UnitTangent t0 = s.unit_tangent(SpaceConfig(3));
    for (double t : {-20.0, -7.5, 0.3, 12.0, 20.0}) {
      const UnitTangent t1 = geodesic_point(t0, t);
      const double scale = t1.point.x.squaredNorm();
      CHECK(std::abs(inner(t1.point.x, t1.point.x) + 1.0) <= 1e-9 * std::max(1.0, scale));
      CHECK(distance(t0.point, t1.point) == doctest::Approx(std::abs(t)).epsilon(1e-9));
    }
  }
}

TEST_CASE("range guard on the geodesic parameter") { CHECK_THROWS(geodesic_point(UnitTangent::base(SpaceConfig(1)), 60.0)); }

TEST_CASE("ideal endpoints: base examples and the direct limit") {
  const auto [m, p] = ideal_endpoints(UnitTangent::base(SpaceConfig(2)));
  CHECK((m.dir - Vector::Unit(3, 0) * -1.0).norm() < 1e-15);
  CHECK((p.dir - Vector::Unit(3, 0)).norm() < 1e-15);
  const UnitTangent e2{HPoint::origin(SpaceConfig(2)), Vector::Unit(4, 2)};
  CHECK((ideal_endpoints(e2).second.dir - Vector::Unit(3, 1)).norm() < 1e-15);

  Sampler s(22);
  for (int k = 0; k < 50; ++k) {
    const UnitTangent t0 = s.unit_tangent(SpaceConfig(2));
    const auto [a, b] = ideal_endpoints(t0);
    CHECK((b.dir - oracle::endpoint_limit(t0.point.x, t0.dir, 20.0)).norm() < 1e-8);
    CHECK((a.dir - oracle::endpoint_limit(t0.point.x, t0.dir, -20.0)).norm() < 1e-8);
    CHECK((a.dir - b.dir).norm() > 1e-12);
  }
}

TEST_CASE("log_map inverts exp_map") {
  const HPoint o = HPoint::origin(SpaceConfig(1));
  Vector q(3);
  q << std::cosh(1.0), std::sinh(1.0), 0.0;
  const HTangent l = log_map(o, HPoint::checked(q));
  CHECK((l.vec - Vector::Unit(3, 1)).norm() < 1e-12);
  CHECK(log_map(o, o).vec.norm() == 0.0);

  Sampler s(23);
  for (int k = 0; k < 50; ++k) {
    const HPoint a = s.unit_tangent(SpaceConfig(3)).point;
    const HPoint b = s.unit_tangent(SpaceConfig(3)).point;
    CHECK(distance(exp_map(log_map(a, b)), b) < 1e-9);
  }
}

TEST_CASE("parallel transport is a linear isometry") {
  Sampler s(24);
  const SpaceConfig cfg(3);
  for (int k = 0; k < 50; ++k) {
    const UnitTangent t0 = s.unit_tangent(cfg);
    auto tangent = [&] { return HTangent::projected(t0.point, s.gaussian(5)); };
    const HTangent w1 = tangent(), w2 = tangent();
    const double t = s.uniform(-3, 3);
    const HTangent a = parallel_transport(t0, t, w1), b = parallel_transport(t0, t, w2);
    CHECK(std::abs(inner(a.vec, b.vec) - inner(w1.vec, w2.vec)) <= 1e-10 * std::max(1.0, w1.vec.norm() * w2.vec.norm()));
    // the geodesic velocity is transported to itself
    const HTangent u = parallel_transport(t0, t, HTangent{t0.point, t0.dir});
    CHECK((u.vec - geodesic_point(t0, t).dir).norm() < 1e-10);
  }
}

TEST_CASE("covariant derivative: parallel field, geodesic velocity, rotating frame") {
  const UnitTangent t0 = UnitTangent::base(SpaceConfig(2));
  const double h = 1e-3;
  std::vector<Vector> curve, parallel, velocity, rotating, expected;
  const HTangent e1{t0.point, Vector::Unit(4, 2)}, e2{t0.point, Vector::Unit(4, 3)};
  for (int i = 0; i < 21; ++i) {
    const double t = (i - 10) * h + 0.4;
    const UnitTangent g = geodesic_point(t0, t);
    curve.push_back(g.point.x);
    const Vector a = parallel_transport(t0, t, e1).vec, b = parallel_transport(t0, t, e2).vec;
    parallel.push_back(a + b);
    velocity.push_back(g.dir);
    rotating.push_back(std::cos(t) * a + std::sin(t) * b);
    expected.push_back(-std::sin(t) * a + std::cos(t) * b);
  }
  for (std::size_t i : {1ul, 10ul, 19ul}) {
    CHECK(covariant_derivative(curve, parallel, h, i).value.vec.norm() < 1e-6);
    CHECK(covariant_derivative(curve, velocity, h, i).value.vec.norm() < 1e-6);
    CHECK((covariant_derivative(curve, rotating, h, i).value.vec - expected[i]).norm() < 1e-6);
  }
  CHECK(covariant_derivative(curve, parallel, h, 0).one_sided);
  CHECK_FALSE(covariant_derivative(curve, parallel, h, 5).one_sided);
}

TEST_CASE("jacobi_eval: initial data, conserved quantity, explicit variation") {
  Sampler s(25);
  const SpaceConfig cfg(2);
  const UnitTangent t0 = UnitTangent::base(cfg);
  const HTangent j0{t0.point, Vector::Unit(4, 2)}, zero{t0.point, Vector::Zero(4)};
  const JacobiState at0 = jacobi_eval(t0, j0, zero, 0.0);
  CHECK((at0.value.vec - j0.vec).norm() < 1e-15);

  // J(t) = cosh t * (transport of e2)
  for (double t : {-1.0, 0.5, 2.0}) {
    const JacobiState js = jacobi_eval(t0, j0, zero, t);
    CHECK((js.value.vec - std::cosh(t) * parallel_transport(t0, t, j0).vec).norm() < 1e-12);
  }

  // |J|^2 - |J'|^2 is constant
  const HTangent a{t0.point, Vector(Vector::Unit(4, 2) * 0.7 + Vector::Unit(4, 3) * 0.2)};
  const HTangent b{t0.point, Vector(Vector::Unit(4, 3) * -1.1)};
  const double c0 = a.vec.squaredNorm() - b.vec.squaredNorm();
  for (double t : {-2.0, 0.7, 3.0}) {
    const JacobiState js = jacobi_eval(t0, a, b, t);
    CHECK(std::abs(inner(js.value.vec, js.value.vec) - inner(js.derivative.vec, js.derivative.vec) - c0) < 1e-10);
  }

  // FD of the variation r -> exp(r x_h) exp(r y_v) gamma_o: J(0) = x, J'(0) = -y.
  const Vector x = s.gaussian(2), y = s.gaussian(2);
  const double hr = 1e-4;
  for (double t : {0.0, 0.8, -1.3}) {
    auto point = [&](double r) {
      const Matrix g = oracle::taylor_exp(r * oracle::h_matrix(x, Vector::Zero(2))) *
                       oracle::taylor_exp(r * oracle::h_matrix(Vector::Zero(2), y));
      return Vector(g * geodesic_point(t0, t).point.x);
    };
    const Vector fd = (point(hr) - point(-hr)) / (2.0 * hr);
    const HTangent J0{t0.point, spatial_to_ambient(Vector((Vector(3) << 0.0, x).finished()))};
    const HTangent J1{t0.point, spatial_to_ambient(Vector((Vector(3) << 0.0, -y).finished()))};
    CHECK((jacobi_eval(t0, J0, J1, t).value.vec - fd).norm() < 1e-5 * std::max(1.0, fd.norm()));
  }
}

TEST_CASE("jacobi_eval rejects data not orthogonal to the geodesic") {
  const UnitTangent t0 = UnitTangent::base(SpaceConfig(1));
  CHECK_THROWS_AS(jacobi_eval(t0, HTangent{t0.point, t0.dir}, HTangent{t0.point, Vector::Zero(3)}, 1.0), Error);
}
