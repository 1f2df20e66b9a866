#include <cmath>

#include "doctest.h"
#include "hyperlines/boundary.hpp"
#include "hyperlines/sampling.hpp"

using namespace hyperlines;

TEST_CASE("reflection T_{p,q} swaps p and q and is an isometry") {
  Sampler s(41);
  for (int k = 0; k < 20; ++k) {
    const OrientedGeodesic g = s.geodesic(SpaceConfig(3));
    CHECK((reflection_T(g.minus, g.plus, g.minus.dir) - g.plus.dir).norm() < 1e-12);
    const Vector v = s.gaussian(4);
    CHECK(reflection_T(g.minus, g.plus, v).norm() == doctest::Approx(v.norm()));
  }
}

TEST_CASE("mss norm at the base pair") {
  // h coordinates (x, y) carry Jacobi data J0 = x, J1 = -y, so the endpoint
  // velocities at (-e1, e1) are J0 - J1 = x + y and J0 + J1 = x - y.
  Sampler s(42);
  for (int k = 0; k < 50; ++k) {
    const Vector x = s.gaussian(2), y = s.gaussian(2);
    const BoundaryTangent bt = jacobi_to_boundary(GTangent::at_base(x, y));
    CHECK(norm_mss(bt) == doctest::Approx(x.squaredNorm() - y.squaredNorm()).epsilon(1e-12));
    Vector xm(3), xp(3);
    xm << 0, x + y;
    xp << 0, x - y;
    CHECK((bt.xi_minus - xm).norm() < 1e-12);
    CHECK((bt.xi_plus - xp).norm() < 1e-12);
  }
}

TEST_CASE("closed form agrees with finite differences of the endpoint curve") {
  Sampler s(43);
  const double h = 1e-5;
  for (int k = 0; k < 20; ++k) {
    const Vector x = s.gaussian(2), y = s.gaussian(2);
    const AlgebraElement X = h_element(x, y);
    const OrientedGeodesic a = geodesic_in_G(X, -h), b = geodesic_in_G(X, h);
    const BoundaryTangent bt = jacobi_to_boundary(GTangent::at_base(x, y));
    CHECK((bt.xi_minus - (b.minus.dir - a.minus.dir) / (2 * h)).norm() < 1e-5 * (1 + bt.xi_minus.norm()));
    CHECK((bt.xi_plus - (b.plus.dir - a.plus.dir) / (2 * h)).norm() < 1e-5 * (1 + bt.xi_plus.norm()));
  }
}

TEST_CASE("endpoint map is an isometry g1 -> mss") {
  Sampler s(44);
  for (int n : {1, 2, 3}) {
    for (int k = 0; k < 100; ++k) {
      const GTangent gt = s.gtangent(SpaceConfig(n));
      CHECK(std::abs(norm_mss(jacobi_to_boundary(gt)) - norm_g1(gt)) <= 1e-8 * gt.scale());
    }
  }
}

TEST_CASE("mobius action is equivariant with ideal endpoints and preserves mss") {
  Sampler s(45);
  const SpaceConfig cfg(2);
  for (int k = 0; k < 50; ++k) {
    const Matrix g = s.group_element(cfg);
    const UnitTangent t0 = s.unit_tangent(cfg);
    const auto [m, p] = ideal_endpoints(t0);
    const Matrix gt = g;
    const auto [gm, gp] = ideal_endpoints(UnitTangent::normalized(gt * t0.point.x, gt * t0.dir));
    CHECK((mobius_action(g, m).dir - gm.dir).norm() < 1e-9);
    CHECK((mobius_action(g, p).dir - gp.dir).norm() < 1e-9);

    const BoundaryTangent bt = s.boundary_tangent(cfg);
    CHECK(std::abs(norm_mss(d_pair_action(g, bt)) - norm_mss(bt)) <= 1e-8 * (1 + bt.scale()));
  }
}
