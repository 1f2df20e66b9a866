#include <cmath>

#include "doctest.h"
#include "hyperlines/almoststruct.hpp"
#include "hyperlines/sampling.hpp"
#include "oracles.hpp"

using namespace hyperlines;

namespace {

Octonion random_oct(Sampler& s) {
  Octonion o;
  for (auto& c : o.c) c = s.normal();
  return o;
}

Vector as_vec(const Octonion& o) { return Eigen::Map<const Vector>(o.c.data(), 8); }

}  // namespace

TEST_CASE("octonion product: oracle, normed, alternative") {
  Sampler s(61);
  for (int k = 0; k < 100; ++k) {
    const Octonion a = random_oct(s), b = random_oct(s);
    const Octonion ab = oct_mul(a, b);
    CHECK((as_vec(ab) - oracle::omul(as_vec(a), as_vec(b))).norm() < 1e-12);
    CHECK(ab.norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
    CHECK((as_vec(oct_mul(oct_mul(a, a), b)) - as_vec(oct_mul(a, oct_mul(a, b)))).norm() < 1e-10);
  }
  // not associative
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e4 = Octonion::unit(4);
  CHECK((as_vec(oct_mul(oct_mul(e1, e2), e4)) - as_vec(oct_mul(e1, oct_mul(e2, e4)))).norm() > 1.0);
}

TEST_CASE("cross product identity on R^7") {
  Sampler s(62);
  for (int k = 0; k < 100; ++k) {
    const Vector u = s.gaussian(7), v = s.gaussian(7);
    const Vector w = cross7(u, v);
    CHECK(w.squaredNorm() == doctest::Approx(u.squaredNorm() * v.squaredNorm() - std::pow(u.dot(v), 2)).epsilon(1e-12));
    CHECK(std::abs(w.dot(u)) < 1e-12 * (1 + w.norm() * u.norm()));
  }
}

TEST_CASE("j on S^6 and J on pairs square to -1") {
  Sampler s(63);
  for (int k = 0; k < 50; ++k) {
    const IdealPoint p = IdealPoint::checked(s.unit_vector(7));
    const Vector x = s.orthogonal_unit(p.dir);
    CHECK((j_sphere(p, j_sphere(p, x)) + x).norm() < 1e-12);
    const BoundaryTangent bt = s.boundary_tangent(SpaceConfig(6));
    const BoundaryTangent jj = big_J(big_J(bt));
    CHECK((jj.xi_minus + bt.xi_minus).norm() < 1e-10 * (1 + bt.xi_minus.norm()));
    CHECK((jj.xi_plus + bt.xi_plus).norm() < 1e-10 * (1 + bt.xi_plus.norm()));
    CHECK(std::abs(mss_bilinear(big_J(bt), bt)) < 1e-10 * (1 + bt.scale()));
  }
  CHECK_THROWS_AS(big_J(s.boundary_tangent(SpaceConfig(2))), Error);
}

TEST_CASE("J is not integrable: Nijenhuis certificate") {
  Sampler s(64);
  for (int k = 0; k < 3; ++k) {
    const BoundaryPair at = s.geodesic(SpaceConfig(6));
    auto tangent = [&] {
      Vector a = s.gaussian(7), b = s.gaussian(7);
      a -= a.dot(at.minus.dir) * at.minus.dir;
      b -= b.dot(at.plus.dir) * at.plus.dir;
      return BoundaryTangent{at, a, b};
    };
    const NijenhuisCertificate c = nijenhuis_certificate(at, tangent(), tangent());
    CHECK(c.converged);
    CHECK(c.extrapolated > 0.1);
  }
}

TEST_CASE("the sphere structure alone has N != 0 too") {
  Sampler s(65);
  const IdealPoint p = IdealPoint::checked(s.unit_vector(7));
  const Vector x = s.orthogonal_unit(p.dir), y = s.orthogonal_unit(p.dir);
  CHECK(sphere_nijenhuis(p, x, y, 1e-4).norm() > 0.1);
}

TEST_CASE("j_o on G_3: square, orthogonality, parallel along geodesics") {
  Sampler s(66);
  const SpaceConfig cfg(2);
  for (int k = 0; k < 20; ++k) {
    const GTangent gt = s.gtangent(cfg);
    const GTangent j = j0_G3(gt), jj = j0_G3(j);
    CHECK((jj.j0 + gt.j0).norm() < 1e-10 * (1 + gt.j0.norm()));
    CHECK(std::abs(norm_g1(j) - norm_g1(gt)) < 1e-10 * gt.scale());
    CHECK(std::abs(norm_g0(j) - norm_g0(gt)) < 1e-10 * gt.scale());
  }
  for (int k = 0; k < 5; ++k) {
    const AlgebraElement X = h_element(s.gaussian(2), s.gaussian(2));
    CHECK(kahler_parallel_check(X, GTangent::at_base(s.gaussian(2), s.gaussian(2)), s.uniform(0.5, 2.0), 20) <= 1e-9);
  }
  Matrix m = Matrix::Identity(4, 4);
  m(0, 0) = 2.0;
  CHECK(kahler_parallel_check(h_element(s.gaussian(2), s.gaussian(2)), GTangent::at_base(s.gaussian(2), s.gaussian(2)), 1.0,
                              20, m) > 1e-3);
}
