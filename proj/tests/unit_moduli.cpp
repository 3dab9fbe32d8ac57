#include "msym/moduli.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace msym;
using msym::test::roots_of_unity;
using msym::test::unit_root;

namespace {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm transposition(int n, int a, int b) {  // 1-based labels
  Perm p = identity_perm(n);
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

}  // namespace

TEST_CASE("lambda vectors live in the coordinate domain") {
  LambdaVector l({Complex(2.0, 0.0)});
  auto cfg = lambda_config(l);
  REQUIRE(cfg.size() == 4);
  CHECK(cfg[0].approx_equal(SpherePoint(0.0)));
  CHECK(cfg[1].approx_equal(SpherePoint(1.0)));
  CHECK(cfg[2].is_infinity());
  CHECK(cfg[3].approx_equal(SpherePoint(2.0)));

  CHECK_THROWS_AS(LambdaVector({Complex(1.0, 0.0), Complex(2.0, 0.0)}),
                  NotInKn);
  CHECK_THROWS_AS(LambdaVector({Complex(0.5, 0.1), Complex(0.5, 0.1)}),
                  NotInKn);
  CHECK_THROWS_AS(LambdaVector({Complex(1e-9, 0.0)}), NotInKn);
}

TEST_CASE("f_sigma closed forms") {
  LambdaVector l({Complex(0.4, 0.3), Complex(-1.2, 0.8), Complex(2.5, -0.6)});
  int n = 6;

  CHECK(mobius_equal(f_sigma(l, identity_perm(n)), MobiusMap::identity()));

  // sigma = (1, p): z -> (z - l_{p-3}) / (1 - l_{p-3})
  for (int p = 4; p <= n; ++p) {
    Complex lp = l[p - 4];
    CHECK(mobius_equal(f_sigma(l, transposition(n, 1, p)),
                       MobiusMap(1.0, -lp, 0.0, 1.0 - lp)));
    // sigma = (2, p): z -> z / l_{p-3}
    CHECK(mobius_equal(f_sigma(l, transposition(n, 2, p)),
                       MobiusMap(1.0, 0.0, 0.0, lp)));
  }
}

TEST_CASE("g_sigma basic values") {
  LambdaVector l({Complex(0.4, 0.3), Complex(-1.2, 0.8), Complex(2.5, -0.6)});
  int n = 6;
  CHECK(lambda_approx_equal(g_sigma(l, identity_perm(n)), l, 1e-12));

  // n = 4, sigma = (1,2): lambda -> 1 - lambda
  LambdaVector l4({Complex(0.3, 0.7)});
  auto g12 = g_sigma(l4, transposition(4, 1, 2));
  CHECK(std::abs(g12[0] - (1.0 - l4[0])) < 1e-12);

  // closed formula for (1,p)(2,q)
  {
    Perm sigma = identity_perm(n);
    std::swap(sigma[0], sigma[4 - 1]);  // 1 <-> 4
    std::swap(sigma[1], sigma[5 - 1]);  // 2 <-> 5
    auto out = g_sigma(l, sigma);
    Complex lp = l[0], lq = l[1];
    CHECK(std::abs(out[0] - (-lp / (lq - lp))) < 1e-12);
    CHECK(std::abs(out[1] - ((1.0 - lp) / (lq - lp))) < 1e-12);
    CHECK(std::abs(out[2] - ((l[2] - lp) / (lq - lp))) < 1e-12);
  }
}

TEST_CASE("closed-form coordinate maps match the generic path") {
  LambdaVector l({Complex(0.4, 0.3), Complex(-1.2, 0.8), Complex(2.5, -0.6)});
  int n = 6;

  // sigma = (2,p)
  {
    CosetRep rep{CosetRep::Kind::S2, 5, 0, 0};
    auto closed = g_sigma_closed_form(l, rep);
    auto generic = g_sigma(l, transposition(n, 2, 5));
    CHECK(lambda_approx_equal(closed, generic, 1e-12));
    CHECK(std::abs(closed[1] - 1.0 / l[1]) < 1e-12);
  }
  // sigma = (3,p); the special coordinate is f(infinity) = 1 - lambda_{p-3},
  // and applying the map twice must return lambda (transpositions are
  // involutions)
  {
    CosetRep rep{CosetRep::Kind::S3, 6, 0, 0};
    auto closed = g_sigma_closed_form(l, rep);
    auto generic = g_sigma(l, transposition(n, 3, 6));
    CHECK(lambda_approx_equal(closed, generic, 1e-12));
    CHECK(std::abs(closed[2] - (1.0 - l[2])) < 1e-12);
    auto twice = g_sigma(generic, transposition(n, 3, 6));
    CHECK(lambda_approx_equal(twice, l, 1e-9));
  }
  // pure V part: h = 1 - lambda with a tail swap
  {
    Perm tau{1, 0, 2};
    auto closed = g_sigma_closed_form(l, CosetRep{}, HMap::OneMinusL, tau);
    Perm v(n);
    v[0] = 1; v[1] = 0; v[2] = 2;        // the (1 2) block
    v[3 + 1] = 3; v[3 + 0] = 4; v[3 + 2] = 5;
    auto generic = g_sigma(l, v);
    CHECK(lambda_approx_equal(closed, generic, 1e-12));
  }
}

TEST_CASE("stabilizer permutations") {
  // generic lambda: only the identity
  LambdaVector generic({Complex(0.4, 0.3), Complex(-1.2, 0.8)});
  auto perms = stabilizer_perms(generic);
  REQUIRE(perms.size() == 1);

  // [lambda] = {0, 1, inf, i, -1, -i} is the octahedron: 24 permutations
  LambdaVector octa({Complex(0, 1), Complex(-1, 0), Complex(0, -1)});
  CHECK(stabilizer_perms(octa).size() == 24);

  // [lambda] = {0, 1, inf, w, w2} has the D3 stabilizer: 6 permutations
  LambdaVector d3({unit_root(1, 3), unit_root(2, 3)});
  auto sp = stabilizer_perms(d3);
  CHECK(sp.size() == 6);
  // Phi is a homomorphism: f_sigma . f_tau = f_{sigma tau}
  for (const auto& s : sp)
    for (const auto& t : sp) {
      MobiusMap lhs = compose(f_sigma(d3, s), f_sigma(d3, t));
      MobiusMap rhs = f_sigma(d3, compose_perm(s, t));
      CHECK(mobius_equal(lhs, rhs, 1e-9));
    }
}

TEST_CASE("jacobian of the identity is the identity") {
  LambdaVector l({Complex(0.4, 0.3), Complex(-1.2, 0.8), Complex(2.5, -0.6)});
  auto J = jacobian(l, identity_perm(6));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(J(i, j) - (i == j ? 1.0 : 0.0)) < 1e-9);
}

TEST_CASE("jacobian trace of a five-cycle on the D5 configuration") {
  auto cfg = PointConfig::canonical(roots_of_unity(5));
  LambdaVector l = lambda_from_config(cfg);
  auto g = compute_stabilizer(lambda_config(l));
  REQUIRE(g.order() == 10);

  bool seen = false;
  for (size_t i = 0; i < g.order(); ++i) {
    if (cycle_type(g.perms[i]) != std::vector<int>{5}) continue;
    auto fps = fixed_points(g.elements[i], 1e-9);
    auto rd = rotation_data(g.elements[i], fps[0], 1e-9);
    double angle = 2.0 * std::numbers::pi * rd.q / rd.order_p;
    Complex tr = jacobian(l, g.perms[i]).trace();
    CHECK(std::abs(tr - Complex(-1.0 - 2.0 * std::cos(angle), 0.0)) < 1e-6);
    if (std::min(rd.q, rd.order_p - rd.q) == 1) {
      CHECK(tr.real() == doctest::Approx(-1.618034).epsilon(1e-4));
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("jacobian sparsity pattern") {
  LambdaVector l({Complex(0.4, 0.3), Complex(-1.2, 0.8), Complex(2.5, -0.6),
                  Complex(0.9, 1.4)});
  int n = 7;
  Perm sigma = transposition(n, 1, 4);  // moves z_4 into slot 1
  auto J = jacobian(l, sigma);
  for (int k = 0; k < 4; ++k) {
    for (int lcol = 0; lcol < 4; ++lcol) {
      int image = sigma[lcol + 3];
      if (image <= 2 || image == lcol + 3) continue;
      CHECK(std::abs(J(k, lcol)) < 1e-7);
    }
  }
}

TEST_CASE("jacobian conjugation preserves traces") {
  // Lemma-style chain rule: J of g_{pi sigma pi^-1} at g_pi(lambda) is
  // similar to J of g_sigma at lambda.
  LambdaVector l({Complex(0, 1), Complex(-1, 0), Complex(0, -1)});
  auto g = compute_stabilizer(lambda_config(l));
  REQUIRE(g.order() == 24);
  std::mt19937 rng(5);
  Perm pi(6);
  for (int i = 0; i < 6; ++i) pi[i] = i;
  std::shuffle(pi.begin(), pi.end(), rng);

  LambdaVector mu = g_sigma(l, pi);
  Perm pi_inv = inverse_perm(pi);
  for (size_t i = 0; i < g.order(); ++i) {
    const Perm& sigma = g.perms[i];
    Perm conj = compose_perm(pi, compose_perm(sigma, pi_inv));
    Complex t1 = jacobian(l, sigma).trace();
    Complex t2 = jacobian(mu, conj).trace();
    CHECK(std::abs(t1 - t2) < 1e-6);
  }
}

TEST_CASE("step guards") {
  // a real step of 0.01 lands the first coordinate exactly on 0
  LambdaVector tight({Complex(0.01, 0.0), Complex(2.3, 0.4)});
  CHECK_THROWS_AS(jacobian(tight, identity_perm(5), 1e-2), StepTooLarge);
}
