#include "msym/smallcases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace msym {

namespace {

constexpr double kPi = std::numbers::pi;
// Window for matching the normal-form parameter against special values.
constexpr double kSpecialTol = 1e-7;

bool near(Complex a, Complex b, double window = kSpecialTol) {
  return std::abs(a - b) <= window * (1.0 + std::abs(a));
}

std::vector<SpherePoint> roots_of_unity(int n, Complex scale = 1.0) {
  std::vector<SpherePoint> pts;
  for (int k = 0; k < n; ++k)
    pts.emplace_back(scale * std::polar(1.0, 2.0 * kPi * k / n));
  return pts;
}

// Lifts the multiplicity machinery onto a raw configuration.
void attach_multvec(SmallCaseReport& rep, const PointConfig& alpha,
                    double tol) {
  if (alpha.size() < 5 || rep.type.tag == GroupType::Tag::Trivial) return;
  auto res = multiplicity_vector(lambda_from_config(alpha, tol), tol);
  rep.multvec = res.primary.vec;
  rep.alternates = res.alternates;
}

// The unique map with psi(z0) = 0, psi and the involution f conjugate so
// that psi . f . psi^{-1} = -z; u is any point off the fixed axis.
MobiusMap pair_normal_form(const MobiusMap& f, const SpherePoint& z0,
                           const SpherePoint& u, double tol) {
  return mobius_from_triple({z0, u, f(u)},
                            {SpherePoint(0.0), SpherePoint(1.0),
                             SpherePoint(-1.0)},
                            tol);
}

}  // namespace

std::vector<Complex> cross_ratio_orbit(Complex lambda, double tol) {
  SpherePoint l(lambda);
  if (l.approx_equal(SpherePoint(0.0), tol) ||
      l.approx_equal(SpherePoint(1.0), tol))
    throw DegenerateLambda("cross-ratio orbit undefined at 0 and 1");

  std::vector<Complex> all{lambda,
                           1.0 - lambda,
                           1.0 / lambda,
                           lambda / (lambda - 1.0),
                           (lambda - 1.0) / lambda,
                           1.0 / (1.0 - lambda)};
  std::vector<Complex> out;
  for (const auto& v : all) {
    bool fresh = true;
    for (const auto& w : out)
      if (SpherePoint(v).approx_equal(SpherePoint(w), tol)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(v);
  }
  return out;
}

std::optional<MobiusMap> find_normalizer(const PointConfig& alpha,
                                         const PointConfig& target,
                                         double tol) {
  const size_t n = alpha.size();
  if (n != target.size() || n < 3) return std::nullopt;
  const std::array<SpherePoint, 3> src{alpha[0], alpha[1], alpha[2]};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        MobiusMap psi =
            mobius_from_triple(src, {target[i], target[j], target[k]}, tol);
        std::vector<char> used(n, 0);
        bool ok = true;
        for (size_t t = 0; t < n && ok; ++t) {
          auto idx = target.find(psi(alpha[t]), 10.0 * tol);
          if (!idx || used[*idx])
            ok = false;
          else
            used[*idx] = 1;
        }
        if (ok) return psi;
      }
    }
  }
  return std::nullopt;
}

SmallCaseReport classify4(const PointConfig& alpha, double tol) {
  if (alpha.size() != 4) throw DegenerateInput("classify4 needs 4 points");
  SmallCaseReport rep;
  SpherePoint cr = cross_ratio(alpha[0], alpha[1], alpha[2], alpha[3], tol);
  Complex lambda = cr.value();

  const Complex harmonic[] = {{2.0, 0.0}, {0.5, 0.0}, {-1.0, 0.0}};
  const Complex equianharmonic[] = {{0.5, std::sqrt(3.0) / 2.0},
                                    {0.5, -std::sqrt(3.0) / 2.0}};
  bool is_harmonic = false, is_equi = false;
  for (const auto& v : harmonic) is_harmonic = is_harmonic || near(lambda, v);
  for (const auto& v : equianharmonic) is_equi = is_equi || near(lambda, v);

  if (is_harmonic) {
    rep.case_path = "D4";
    rep.type = GroupType::dihedral(4);
  } else if (is_equi) {
    rep.case_path = "A4";
    rep.type = GroupType::tetrahedral();
  } else {
    rep.case_path = "K4";
    rep.type = GroupType::dihedral(2);
  }
  rep.order = static_cast<size_t>(rep.type.order());
  rep.parameter_a = lambda;
  rep.psi = mobius_from_triple({alpha[0], alpha[1], alpha[2]},
                               {SpherePoint(0.0), SpherePoint(1.0),
                                SpherePoint::infinity()},
                               tol);
  return rep;
}

SmallCaseReport classify5(const PointConfig& alpha, double tol) {
  if (alpha.size() != 5) throw DegenerateInput("classify5 needs 5 points");
  SmallCaseReport rep;
  SymmetryGroup g = compute_stabilizer(alpha, tol);
  rep.type = group_type(g);
  rep.order = g.order();

  // Normal-form layer: whenever some involution fixes exactly one point of
  // alpha, the configuration matches {0, 1, -1, a, -a} and a routes the
  // case.
  std::optional<Complex> a_param;
  for (size_t i = 1; i < g.order() && !a_param; ++i) {
    const MobiusMap& f = g.elements[i];
    if (element_order(f, tol) != 2) continue;
    auto fps = fixed_points(f, tol);
    const SpherePoint* fixed_in = nullptr;
    int count = 0;
    for (const auto& fp : fps)
      if (alpha.contains(fp, 10.0 * tol)) {
        fixed_in = &fp;
        ++count;
      }
    if (count != 1) continue;
    // Pick a non-fixed point and normalize its pair to {1, -1}.
    for (size_t t = 0; t < alpha.size(); ++t) {
      if (alpha[t].approx_equal(*fixed_in, 10.0 * tol)) continue;
      MobiusMap psi = pair_normal_form(f, *fixed_in, alpha[t], tol);
      for (size_t s = 0; s < alpha.size(); ++s) {
        SpherePoint img = psi(alpha[s]);
        if (img.is_infinity()) continue;
        Complex v = img.value();
        if (near(v, 0.0, 1e-6) || near(v, 1.0, 1e-6) || near(v, -1.0, 1e-6))
          continue;
        a_param = v;
        rep.psi = psi;
        break;
      }
      break;
    }
  }
  rep.parameter_a = a_param;

  double r5 = std::sqrt(5.0);
  auto route_of_a = [&](Complex a) -> std::string {
    const Complex d5[] = {{r5 + 2, 0}, {-(r5 + 2), 0}, {r5 - 2, 0},
                          {-(r5 - 2), 0}};
    const Complex z4[] = {{0, 1}, {0, -1}};
    const Complex d3[] = {{0, std::sqrt(3.0)}, {0, -std::sqrt(3.0)},
                          {0, 1.0 / std::sqrt(3.0)}, {0, -1.0 / std::sqrt(3.0)}};
    for (const auto& v : d5)
      if (near(a, v)) return "4(a)";
    for (const auto& v : z4)
      if (near(a, v)) return "4(b)";
    for (const auto& v : d3)
      if (near(a, v)) return "4(c)";
    return "";
  };

  switch (rep.type.tag) {
    case GroupType::Tag::Dihedral:
      if (rep.type.p == 5) {
        rep.case_path = "1";
        if (!rep.psi)
          rep.psi = find_normalizer(
              alpha, PointConfig::canonical(roots_of_unity(5), tol), tol);
      } else if (rep.type.p == 3) {
        rep.case_path = "3";
        std::vector<SpherePoint> form{SpherePoint(0.0),
                                      SpherePoint::infinity()};
        for (const auto& p : roots_of_unity(3)) form.push_back(p);
        rep.psi =
            find_normalizer(alpha, PointConfig::canonical(form, tol), tol);
      } else {
        throw UnrecognizedGroup("unexpected dihedral order for 5 points");
      }
      break;
    case GroupType::Tag::Cyclic:
      if (rep.type.p == 4) {
        rep.case_path = "2";
        std::vector<SpherePoint> form{SpherePoint(0.0)};
        for (const auto& p : roots_of_unity(4)) form.push_back(p);
        rep.psi =
            find_normalizer(alpha, PointConfig::canonical(form, tol), tol);
      } else if (rep.type.p == 2) {
        rep.case_path = "4(d)";
      } else {
        throw UnrecognizedGroup("unexpected cyclic order for 5 points");
      }
      break;
    case GroupType::Tag::Trivial:
      rep.case_path = "5";
      break;
    default:
      throw UnrecognizedGroup("impossible group for 5 points");
  }

  if (a_param) {
    rep.route = route_of_a(*a_param);
    // Routing and the brute-force stabilizer must tell the same story.
    bool special = !rep.route.empty();
    bool upgraded = rep.type.tag != GroupType::Tag::Cyclic || rep.type.p != 2;
    if (special != upgraded)
      throw ToleranceBreakdown(
          "special-value routing disagrees with the stabilizer");
  }

  attach_multvec(rep, alpha, tol);
  return rep;
}

SmallCaseReport classify6(const PointConfig& alpha, double tol) {
  if (alpha.size() != 6) throw DegenerateInput("classify6 needs 6 points");
  SmallCaseReport rep;
  SymmetryGroup g = compute_stabilizer(alpha, tol);
  rep.type = group_type(g);
  rep.order = g.order();

  auto cubic = [](Complex a, Complex b) {
    return a * a * b + a * b * b + a * a - 6.0 * a * b + b * b + a + b;
  };

  // {±1, ±a, ±b} layer: an involution pairing all six points gives the
  // normal form of case 5.  When another involution fixes two points of
  // alpha (the K4 case) that pair must land on {1, -1}, which is what
  // makes the residual symmetry z -> 1/z and forces ab = ±1.
  std::optional<Complex> a_param, b_param;
  SpherePoint anchor = alpha[0];
  for (size_t i = 1; i < g.order(); ++i) {
    const MobiusMap& h = g.elements[i];
    if (element_order(h, tol) != 2) continue;
    int fixed_in = 0;
    SpherePoint candidate = anchor;
    for (const auto& fp : fixed_points(h, tol))
      if (alpha.contains(fp, 10.0 * tol)) {
        ++fixed_in;
        candidate = fp;
      }
    if (fixed_in == 2) {
      anchor = candidate;
      break;
    }
  }
  for (size_t i = 1; i < g.order(); ++i) {
    const MobiusMap& f = g.elements[i];
    if (element_order(f, tol) != 2) continue;
    if (fixed_points(f, tol).size() != 2) continue;
    bool any_fixed = false;
    for (const auto& fp : fixed_points(f, tol))
      if (alpha.contains(fp, 10.0 * tol)) any_fixed = true;
    if (any_fixed) continue;  // pairing must be free on alpha

    auto fps = fixed_points(f, tol);
    MobiusMap psi = mobius_from_triple(
        {fps[0], fps[1], anchor},
        {SpherePoint(0.0), SpherePoint::infinity(), SpherePoint(1.0)}, tol);
    auto anchor_idx = alpha.find(anchor, 10.0 * tol);
    std::vector<Complex> reps;
    std::vector<char> seen(alpha.size(), 0);
    for (size_t t = 0; t < alpha.size(); ++t) {
      if (seen[t]) continue;
      seen[t] = 1;
      auto mate = alpha.find(f(alpha[t]), 10.0 * tol);
      if (mate) seen[*mate] = 1;
      bool is_anchor_pair =
          anchor_idx && (*anchor_idx == t || (mate && *anchor_idx == *mate));
      if (!is_anchor_pair) reps.push_back(psi(alpha[t]).value());
    }
    if (reps.size() == 2) {
      a_param = reps[0];
      b_param = reps[1];
      rep.psi = psi;
      rep.parameter_a = a_param;
      rep.parameter_b = b_param;
      break;
    }
  }

  switch (rep.type.tag) {
    case GroupType::Tag::Dihedral:
      if (rep.type.p == 6) {
        rep.case_path = "1";
        rep.psi =
            find_normalizer(alpha, PointConfig::canonical(roots_of_unity(6), tol), tol);
      } else if (rep.type.p == 3) {
        rep.case_path = "4(c)";
        if (a_param) {
          // The frame fixes (a, b) only up to signs; the relation holds for
          // some choice.
          rep.route = "5(c)";
          double best = 1e300;
          for (double sa : {1.0, -1.0})
            for (double sb : {1.0, -1.0})
              best = std::min(best,
                              std::abs(cubic(sa * *a_param, sb * *b_param)));
          if (best > 1e-5 * (1.0 + std::abs(*a_param) + std::abs(*b_param)))
            throw ToleranceBreakdown(
                "D3 sextuple does not satisfy the cubic relation");
        }
      } else if (rep.type.p == 2) {
        rep.case_path = "5(d)i";
        if (a_param) {
          Complex ab = (*a_param) * (*b_param);
          if (!near(ab, 1.0, 1e-6) && !near(ab, -1.0, 1e-6))
            throw ToleranceBreakdown("K4 sextuple with ab away from ±1");
        }
      } else {
        throw UnrecognizedGroup("unexpected dihedral order for 6 points");
      }
      break;
    case GroupType::Tag::Cyclic:
      if (rep.type.p == 5) {
        rep.case_path = "2";
        std::vector<SpherePoint> form{SpherePoint(0.0)};
        for (const auto& p : roots_of_unity(5)) form.push_back(p);
        rep.psi =
            find_normalizer(alpha, PointConfig::canonical(form, tol), tol);
      } else if (rep.type.p == 2) {
        rep.case_path = "5(d)ii";
        if (a_param) {
          Complex ab = (*a_param) * (*b_param);
          if (near(ab, 1.0) || near(ab, -1.0))
            throw ToleranceBreakdown("Z2 sextuple with ab = ±1");
          double best = 1e300;
          for (double sa : {1.0, -1.0})
            for (double sb : {1.0, -1.0})
              best = std::min(best,
                              std::abs(cubic(sa * *a_param, sb * *b_param)));
          if (best < 1e-7 * (1.0 + std::abs(*a_param) + std::abs(*b_param)))
            throw ToleranceBreakdown("Z2 sextuple on the cubic surface");
        }
      } else {
        throw UnrecognizedGroup("unexpected cyclic order for 6 points");
      }
      break;
    case GroupType::Tag::Octahedral: {
      rep.case_path = "3";
      std::vector<SpherePoint> form{SpherePoint(0.0), SpherePoint::infinity()};
      for (const auto& p : roots_of_unity(4)) form.push_back(p);
      rep.psi = find_normalizer(alpha, PointConfig::canonical(form, tol), tol);
      break;
    }
    case GroupType::Tag::Trivial:
      rep.case_path = "6";
      break;
    default:
      throw UnrecognizedGroup("impossible group for 6 points");
  }

  attach_multvec(rep, alpha, tol);
  return rep;
}

}  // namespace msym
