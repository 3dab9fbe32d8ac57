#include "msym/stabilizer.hpp"

#include <Eigen/Dense>
#include <complex>

#include "doctest.h"
#include "test_support.hpp"

using namespace msym;
using msym::test::random_mobius;
using msym::test::roots_of_unity;
using msym::test::unit_root;

namespace {

// Independent brute-force oracle for the stabilizer order: builds the map
// through three points by solving the linear system with Eigen and checks
// invariance by raw homogeneous arithmetic.
int naive_stabilizer_order(const std::vector<std::array<Complex, 2>>& pts,
                           double tol) {
  const size_t n = pts.size();
  auto apply_raw = [](const Eigen::Vector4cd& m,
                      const std::array<Complex, 2>& z) {
    return std::array<Complex, 2>{m(0) * z[0] + m(1) * z[1],
                                  m(2) * z[0] + m(3) * z[1]};
  };
  auto same = [&](const std::array<Complex, 2>& a,
                  const std::array<Complex, 2>& b) {
    double num = std::abs(a[0] * b[1] - b[0] * a[1]);
    double den = std::hypot(std::abs(a[0]), std::abs(a[1])) *
                 std::hypot(std::abs(b[0]), std::abs(b[1]));
    return num < tol * den;
  };

  int count = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        // Solve for (a,b,c,d): image of pts[t] parallel to target, t=0,1,2.
        Eigen::Matrix<Complex, 3, 4> A;
        const size_t tgt[3] = {i, j, k};
        for (int r = 0; r < 3; ++r) {
          const auto& z = pts[r];
          const auto& w = pts[tgt[r]];
          // (a z0 + b z1) w1 - (c z0 + d z1) w0 = 0
          A(r, 0) = z[0] * w[1];
          A(r, 1) = z[1] * w[1];
          A(r, 2) = -z[0] * w[0];
          A(r, 3) = -z[1] * w[0];
        }
        Eigen::JacobiSVD<Eigen::Matrix<Complex, 3, 4>> svd(
            A, Eigen::ComputeFullV);
        Eigen::Vector4cd m = svd.matrixV().col(3);

        bool ok = true;
        std::vector<char> used(n, 0);
        for (size_t t = 0; t < n && ok; ++t) {
          auto img = apply_raw(m, pts[t]);
          bool hit = false;
          for (size_t s = 0; s < n && !hit; ++s) {
            if (!used[s] && same(img, pts[s])) {
              used[s] = 1;
              hit = true;
            }
          }
          ok = hit;
        }
        if (ok) ++count;
      }
    }
  }
  return count;
}

std::array<Complex, 2> raw(const SpherePoint& p) { return {p.a(), p.b()}; }

}  // namespace

TEST_CASE("point configs reject duplicates and find points") {
  CHECK_THROWS_AS(PointConfig({SpherePoint(1.0), SpherePoint(1.0 + 1e-12)}),
                  DegenerateInput);
  auto cfg = PointConfig::canonical(
      {SpherePoint::infinity(), SpherePoint(2.0), SpherePoint(-1.0)});
  CHECK(cfg[0].approx_equal(SpherePoint(-1.0)));
  CHECK(cfg[2].is_infinity());
  CHECK(cfg.find(SpherePoint(2.0), 1e-9).value() == 1);
  CHECK_FALSE(cfg.find(SpherePoint(3.0), 1e-9).has_value());
}

TEST_CASE("is_invariant") {
  auto cfg3 = PointConfig::canonical(roots_of_unity(3));
  CHECK(is_invariant(MobiusMap::identity(), cfg3, 1e-9));
  CHECK(is_invariant(MobiusMap::scaling(unit_root(1, 3)), cfg3, 1e-9));
  auto pair = PointConfig({SpherePoint(0.0), SpherePoint(1.0)});
  CHECK_FALSE(is_invariant(MobiusMap(1.0, 1.0, 0.0, 1.0), pair, 1e-9));
}

TEST_CASE("stabilizer of the fifth roots of unity is D5") {
  auto cfg = PointConfig::canonical(roots_of_unity(5));
  auto g = compute_stabilizer(cfg);
  CHECK(g.order() == 10);
  CHECK(mobius_equal(g.elements[0], MobiusMap::identity()));
  CHECK(g.find(MobiusMap::scaling(unit_root(1, 5))).has_value());
  CHECK(g.find(MobiusMap::inversion()).has_value());

  // group axioms within tolerance
  for (const auto& f : g.elements) {
    CHECK(g.find(inverse(f)).has_value());
    for (const auto& h : g.elements)
      CHECK(g.find(compose(f, h)).has_value());
  }

  // permutation map is an injective homomorphism; elements are elliptic
  for (size_t i = 0; i < g.order(); ++i) {
    for (size_t j = i + 1; j < g.order(); ++j)
      CHECK(g.perms[i] != g.perms[j]);
    if (i > 0) {
      Complex tr2 = g.elements[i].trace() * g.elements[i].trace();
      CHECK(std::abs(tr2.imag()) < 1e-9);
      CHECK(tr2.real() < 4.0 - 1e-9);
      CHECK(tr2.real() > -1e-9);
    }
  }
}

TEST_CASE("stabilizer of the octahedron vertex set has order 24") {
  std::vector<SpherePoint> pts{SpherePoint(0.0), SpherePoint::infinity()};
  for (auto& p : roots_of_unity(4)) pts.push_back(p);
  auto g = compute_stabilizer(PointConfig::canonical(pts));
  CHECK(g.order() == 24);
}

TEST_CASE("generic configurations have trivial stabilizer") {
  std::vector<SpherePoint> pts{SpherePoint(0.0), SpherePoint(1.0),
                               SpherePoint(Complex(2.3, 0.7)),
                               SpherePoint(-5.0), SpherePoint(Complex(0, 0.1))};
  auto cfg = PointConfig::canonical(pts);
  auto g = compute_stabilizer(cfg);
  CHECK(g.order() == 1);

  std::vector<std::array<Complex, 2>> raw_pts;
  for (const auto& p : cfg.points()) raw_pts.push_back(raw(p));
  CHECK(naive_stabilizer_order(raw_pts, 1e-7) == 1);
}

TEST_CASE("oracle agrees on symmetric configurations") {
  auto cfg = PointConfig::canonical(roots_of_unity(5));
  std::vector<std::array<Complex, 2>> raw_pts;
  for (const auto& p : cfg.points()) raw_pts.push_back(raw(p));
  CHECK(naive_stabilizer_order(raw_pts, 1e-7) == 10);
}

TEST_CASE("small and infinite boundaries") {
  CHECK_THROWS_AS(
      compute_stabilizer(PointConfig({SpherePoint(0.0), SpherePoint(1.0)})),
      InfiniteStabilizer);
  // any three points have the full order-6 stabilizer of the triple
  auto g = compute_stabilizer(PointConfig(
      {SpherePoint(0.0), SpherePoint(Complex(1.1, 0.3)), SpherePoint(-2.0)}));
  CHECK(g.order() == 6);
}

TEST_CASE("permutations of known maps") {
  std::vector<SpherePoint> pts{SpherePoint(0.0)};
  for (auto& p : roots_of_unity(4)) pts.push_back(p);
  auto cfg = PointConfig::canonical(pts);

  auto id_perm = permutation_of(MobiusMap::identity(), cfg);
  for (size_t i = 0; i < cfg.size(); ++i) CHECK(id_perm[i] == (int)i);

  auto sigma = permutation_of(MobiusMap::scaling(Complex(0, 1)), cfg);
  auto ct = cycle_type(sigma);
  CHECK(ct == std::vector<int>{4, 1});
  auto zero_idx = cfg.find(SpherePoint(0.0), 1e-9).value();
  CHECK(sigma[zero_idx] == (int)zero_idx);

  auto five = PointConfig::canonical(roots_of_unity(5));
  auto tau = permutation_of(MobiusMap::inversion(), five);
  CHECK(cycle_type(tau) == std::vector<int>{2, 2, 1});
  auto one_idx = five.find(SpherePoint(1.0), 1e-9).value();
  CHECK(tau[one_idx] == (int)one_idx);

  CHECK_THROWS_AS(permutation_of(MobiusMap(1.0, 1.0, 0.0, 1.0), five),
                  NotInvariant);
}

TEST_CASE("element order") {
  CHECK(element_order(MobiusMap::identity()) == 1);
  CHECK(element_order(MobiusMap::scaling(Complex(0, 1))) == 4);

  // z -> (iz+1)/(z+i): repeated-composition oracle says order 4
  MobiusMap f(Complex(0, 1), 1.0, 1.0, Complex(0, 1));
  MobiusMap acc = f;
  int naive = 1;
  while (!mobius_equal(acc, MobiusMap::identity(), 1e-9) && naive < 100) {
    acc = compose(acc, f);
    ++naive;
  }
  CHECK(naive == 4);
  CHECK(element_order(f) == 4);

  CHECK_THROWS_AS(element_order(MobiusMap::scaling(2.0)), NotFiniteOrder);
}

TEST_CASE("stabilizers transform by conjugation") {
  std::mt19937 rng(31);
  std::vector<SpherePoint> pts{SpherePoint(0.0), SpherePoint::infinity()};
  for (auto& p : roots_of_unity(3)) pts.push_back(p);
  auto alpha = PointConfig::canonical(pts);
  auto g = compute_stabilizer(alpha);
  CHECK(g.order() == 6);

  for (int t = 0; t < 5; ++t) {
    MobiusMap psi = random_mobius(rng);
    std::vector<SpherePoint> moved;
    for (const auto& p : alpha.points()) moved.push_back(psi(p));
    auto beta = PointConfig::canonical(moved);
    auto h = compute_stabilizer(beta);
    REQUIRE(h.order() == g.order());
    for (const auto& f : g.elements) {
      MobiusMap conj = compose(compose(psi, f), inverse(psi));
      CHECK(h.find(conj).has_value());
    }
  }
}

TEST_CASE("order bound n(n-1)(n-2)") {
  std::mt19937 rng(37);
  for (int t = 0; t < 10; ++t) {
    std::vector<SpherePoint> pts;
    size_t n = 4 + rng() % 4;
    while (pts.size() < n) {
      SpherePoint cand = msym::test::random_point(rng);
      bool fresh = true;
      for (const auto& p : pts)
        if (p.approx_equal(cand, 1e-3)) fresh = false;
      if (fresh) pts.push_back(cand);
    }
    auto g = compute_stabilizer(PointConfig::canonical(pts));
    CHECK(g.order() <= n * (n - 1) * (n - 2));
  }
}
