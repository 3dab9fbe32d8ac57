#include "msym/sphere.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace msym;
using msym::test::random_mobius;
using msym::test::random_point;
using msym::test::unit_root;

namespace {

bool point_is(const SpherePoint& p, Complex v, double tol = 1e-9) {
  return p.approx_equal(SpherePoint(v), tol);
}

}  // namespace

TEST_CASE("sphere points canonicalize and compare chordally") {
  SpherePoint inf = SpherePoint::infinity();
  CHECK(inf.is_infinity());
  CHECK(SpherePoint::homogeneous(Complex(3.0, 0.0), Complex(0.0, 0.0))
            .is_infinity());
  CHECK(point_is(SpherePoint::homogeneous(Complex(6.0, 0.0), 2.0), 3.0));
  CHECK(SpherePoint(1e13).chordal(inf) < 1e-9);  // huge values sit at the pole
  CHECK(SpherePoint(0.0).chordal(inf) == doctest::Approx(1.0));
  CHECK_THROWS_AS(SpherePoint::homogeneous(0.0, 0.0), DegenerateInput);
}

TEST_CASE("cross ratio normalization and paper values") {
  SpherePoint zero(0.0), one(1.0), inf = SpherePoint::infinity();
  Complex lambda(0.7, 0.4);
  CHECK(point_is(cross_ratio(zero, one, SpherePoint(lambda), inf), lambda));

  // [1, i, -1, -i] = 2
  CHECK(point_is(cross_ratio(SpherePoint(1.0), SpherePoint(Complex(0, 1)),
                             SpherePoint(-1.0), SpherePoint(Complex(0, -1))),
                 2.0));

  // [1, w, w^2, w^3] = w^4 + w + 2 for w = exp(2 pi i / 5)
  Complex w = unit_root(1, 5);
  SpherePoint cr = cross_ratio(SpherePoint(1.0), SpherePoint(w),
                               SpherePoint(w * w), SpherePoint(w * w * w));
  CHECK(point_is(cr, w * w * w * w + w + 2.0));
  CHECK(cr.value().real() == doctest::Approx(2.618034).epsilon(1e-6));
  CHECK(cr.value().imag() == doctest::Approx(0.0).epsilon(1e-9));

  CHECK_THROWS_AS(cross_ratio(zero, zero, one, inf), DegenerateInput);
}

TEST_CASE("mobius_from_triple pins three points") {
  SpherePoint zero(0.0), one(1.0), inf = SpherePoint::infinity();
  CHECK(mobius_equal(mobius_from_triple({zero, one, inf}, {zero, one, inf}),
                     MobiusMap::identity()));

  // (a, 1, inf) -> (0, 1, inf) is z -> (z - a) / (1 - a)
  Complex a(0.3, 1.2);
  MobiusMap f =
      mobius_from_triple({SpherePoint(a), one, inf}, {zero, one, inf});
  CHECK(mobius_equal(f, MobiusMap(1.0, -a, 0.0, 1.0 - a)));

  // (1, i, -i) -> (0, 1, inf) is z -> ((1-i) z + i - 1) / (z + i)
  MobiusMap phi = mobius_from_triple(
      {one, SpherePoint(Complex(0, 1)), SpherePoint(Complex(0, -1))},
      {zero, one, inf});
  CHECK(mobius_equal(
      phi, MobiusMap(Complex(1, -1), Complex(-1, 1), 1.0, Complex(0, 1))));

  CHECK_THROWS_AS(mobius_from_triple({zero, zero, one}, {zero, one, inf}),
                  DegenerateInput);
}

TEST_CASE("apply handles the pole without special cases") {
  SpherePoint zero(0.0), one(1.0), inf = SpherePoint::infinity();
  CHECK(MobiusMap::identity()(one).approx_equal(one));
  CHECK(MobiusMap::inversion()(zero).is_infinity());
  CHECK(MobiusMap::inversion()(inf).approx_equal(zero));

  // z -> (iz + 1)/(z + i) fixes 1: direct evaluation oracle
  Complex i(0, 1);
  Complex direct = (i * 1.0 + 1.0) / (1.0 + i);
  CHECK(std::abs(direct - 1.0) < 1e-15);
  MobiusMap f(i, 1.0, 1.0, i);
  CHECK(f(one).approx_equal(one));
}

TEST_CASE("compose and inverse") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    MobiusMap f = random_mobius(rng);
    CHECK(mobius_equal(compose(f, inverse(f)), MobiusMap::identity()));
    CHECK(mobius_equal(compose(inverse(f), f), MobiusMap::identity()));
  }

  Complex w = unit_root(1, 3);
  CHECK(mobius_equal(compose(MobiusMap::scaling(w), MobiusMap::scaling(w)),
                     MobiusMap::scaling(w * w)));

  // f(z) = e^{2 pi i/5} z and g(z) = 1/z give an involution of D_5
  MobiusMap fg = compose(MobiusMap::scaling(unit_root(1, 5)),
                         MobiusMap::inversion());
  CHECK(mobius_equal(compose(fg, fg), MobiusMap::identity()));

  MobiusMap r = MobiusMap::scaling(w);
  CHECK(mobius_equal(inverse(r), MobiusMap::scaling(1.0 / w)));
  CHECK(mobius_equal(inverse(MobiusMap::identity()), MobiusMap::identity()));
}

TEST_CASE("mobius_equal is projective") {
  MobiusMap f(Complex(0, 1), 1.0, 1.0, Complex(0, 1));
  CHECK(mobius_equal(f, f));
  MobiusMap scaled(Complex(0, 2), 2.0, 2.0, Complex(0, 2));
  CHECK(mobius_equal(f, scaled));
  CHECK_FALSE(mobius_equal(MobiusMap::scaling(unit_root(1, 3)),
                           MobiusMap::scaling(unit_root(2, 3))));
}

TEST_CASE("projective invariance of apply under matrix scaling") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    MobiusMap f = random_mobius(rng);
    Complex s(1.7, -0.4);
    MobiusMap g(f.a() * s, f.b() * s, f.c() * s, f.d() * s);
    SpherePoint z = random_point(rng);
    CHECK(f(z).approx_equal(g(z), 1e-12));
    CHECK(mobius_equal(f, g, 1e-12));
  }
}

TEST_CASE("cross ratio is a Moebius invariant") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    SpherePoint z1 = random_point(rng), z2 = random_point(rng),
                z3 = random_point(rng), z4 = random_point(rng);
    if (z1.approx_equal(z2, 1e-3) || z1.approx_equal(z3, 1e-3) ||
        z1.approx_equal(z4, 1e-3) || z2.approx_equal(z3, 1e-3) ||
        z2.approx_equal(z4, 1e-3) || z3.approx_equal(z4, 1e-3))
      continue;
    MobiusMap f = random_mobius(rng);
    SpherePoint before = cross_ratio(z1, z2, z3, z4);
    SpherePoint after = cross_ratio(f(z1), f(z2), f(z3), f(z4));
    CHECK(before.approx_equal(after, 1e-9));
  }
}

TEST_CASE("mobius_from_triple reproduces its triple") {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    std::array<SpherePoint, 3> src{random_point(rng), random_point(rng),
                                   random_point(rng)};
    std::array<SpherePoint, 3> dst{random_point(rng), random_point(rng),
                                   random_point(rng)};
    bool degenerate = false;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (src[i].approx_equal(src[j], 1e-3) ||
            dst[i].approx_equal(dst[j], 1e-3))
          degenerate = true;
    if (degenerate) continue;
    MobiusMap f = mobius_from_triple(src, dst);
    for (int i = 0; i < 3; ++i) CHECK(f(src[i]).approx_equal(dst[i], 1e-9));
  }
}

TEST_CASE("fixed points") {
  CHECK_THROWS_AS(fixed_points(MobiusMap::identity()), IdentityMap);

  auto fps = fixed_points(MobiusMap::scaling(unit_root(1, 7)));
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].approx_equal(SpherePoint(0.0)));
  CHECK(fps[1].is_infinity());

  fps = fixed_points(MobiusMap::inversion());
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].approx_equal(SpherePoint(-1.0)));
  CHECK(fps[1].approx_equal(SpherePoint(1.0)));

  // z -> lambda / z fixes the two square roots of lambda
  Complex lambda(2.0, 0.5);
  fps = fixed_points(MobiusMap(0.0, lambda, 1.0, 0.0));
  Complex root = std::sqrt(lambda);
  REQUIRE(fps.size() == 2);
  bool match = (point_is(fps[0], root) && point_is(fps[1], -root)) ||
               (point_is(fps[0], -root) && point_is(fps[1], root));
  CHECK(match);

  // parabolic z -> z + 1 has only the pole
  fps = fixed_points(MobiusMap(1.0, 1.0, 0.0, 1.0));
  REQUIRE(fps.size() == 1);
  CHECK(fps[0].is_infinity());
}

TEST_CASE("rotation data and its anchor swap") {
  MobiusMap quarter = MobiusMap::scaling(Complex(0, 1));
  auto rd = rotation_data(quarter, SpherePoint(0.0));
  CHECK(rd.order_p == 4);
  CHECK(rd.q == 1);

  rd = rotation_data(quarter, SpherePoint::infinity());
  CHECK(rd.order_p == 4);
  CHECK(rd.q == 3);

  rd = rotation_data(MobiusMap::inversion(), SpherePoint(1.0));
  CHECK(rd.order_p == 2);
  CHECK(rd.q == 1);

  CHECK_THROWS_AS(rotation_data(quarter, SpherePoint(5.0)), AnchorNotFixed);
  CHECK_THROWS_AS(rotation_data(MobiusMap(1.0, 1.0, 0.0, 1.0),
                                SpherePoint::infinity()),
                  NotFiniteOrder);
  // loxodromic
  CHECK_THROWS_AS(rotation_data(MobiusMap::scaling(2.0), SpherePoint(0.0)),
                  NotFiniteOrder);
}

TEST_CASE("finite order elements power up to the identity") {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    int p = 2 + static_cast<int>(rng() % 11);
    int q = 1 + static_cast<int>(rng() % (p - 1));
    while (std::gcd(q, p) != 1) q = 1 + static_cast<int>(rng() % (p - 1));
    MobiusMap psi = random_mobius(rng);
    MobiusMap f = compose(compose(psi, MobiusMap::scaling(unit_root(q, p))),
                          inverse(psi));
    auto rd = rotation_data(f, fixed_points(f)[0], 1e-9);
    CHECK(rd.order_p == p);
    CHECK(std::min(rd.q, p - rd.q) == std::min(q, p - q));

    MobiusMap acc = f;
    for (int k = 1; k < p; ++k) {
      CHECK_FALSE(mobius_equal(acc, MobiusMap::identity()));
      acc = compose(acc, f);
    }
    CHECK(mobius_equal(acc, MobiusMap::identity(), 1e-8));

    // the two anchors give q and p - q
    auto fps = fixed_points(f);
    auto rd2 = rotation_data(f, fps[1], 1e-9);
    auto rd1 = rotation_data(f, fps[0], 1e-9);
    CHECK(rd1.q + rd2.q == p);
  }
}
