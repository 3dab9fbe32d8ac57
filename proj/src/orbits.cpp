#include "msym/orbits.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace msym {

namespace {

MobiusMap primitive_rotation(int n) {
  return MobiusMap::scaling(std::polar(1.0, 2.0 * std::numbers::pi / n));
}

// Face-center set of the icosahedral model used here: the two poles plus
// the roots of z^10 + 11 z^5 - 1.
std::vector<SpherePoint> icosahedral_vertex_set() {
  std::vector<Complex> coeffs{-1.0, 0.0, 0.0, 0.0, 0.0, 11.0,
                              0.0,  0.0, 0.0, 0.0, 1.0};
  auto roots = polynomial_roots(coeffs);
  std::vector<SpherePoint> pts{SpherePoint(0.0), SpherePoint::infinity()};
  for (const auto& r : roots) pts.emplace_back(r);
  return pts;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots;
  roots.reserve(deg);
  for (int i = 0; i < deg; ++i) {
    Complex z = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {  // Newton polish
      Complex p = 0.0, dp = 0.0;
      for (int k = deg; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + coeffs[k];
      }
      if (std::abs(dp) == 0.0) break;
      z -= p / dp;
    }
    roots.push_back(z);
  }
  return roots;
}

SymmetryGroup close_generators(const std::vector<MobiusMap>& gens,
                               size_t max_order_cap, double tol) {
  SymmetryGroup g;
  g.tol = tol;
  g.elements.push_back(MobiusMap::identity());
  size_t frontier_start = 0;
  while (frontier_start < g.elements.size()) {
    size_t frontier_end = g.elements.size();
    for (size_t i = frontier_start; i < frontier_end; ++i) {
      for (const auto& gen : gens) {
        MobiusMap h = compose(gen, g.elements[i]);
        if (!g.find(h)) {
          g.elements.push_back(h);
          if (g.elements.size() > max_order_cap)
            throw ClosureFailure("generator closure exceeded the cap");
        }
      }
    }
    frontier_start = frontier_end;
  }
  std::sort(g.elements.begin() + 1, g.elements.end(),
            [](const MobiusMap& a, const MobiusMap& b) {
              for (size_t i = 0; i < 4; ++i) {
                const Complex &x = a.entries()[i], &y = b.entries()[i];
                if (x.real() != y.real()) return x.real() < y.real();
                if (x.imag() != y.imag()) return x.imag() < y.imag();
              }
              return false;
            });
  return g;
}

StandardGroup standard_group(const GroupType& type, double tol) {
  StandardGroup out;
  out.type = type;
  switch (type.tag) {
    case GroupType::Tag::Trivial:
      throw InvalidRecipe("no standard model for the trivial group");
    case GroupType::Tag::Cyclic:
      out.generators = {primitive_rotation(type.p)};
      break;
    case GroupType::Tag::Dihedral:
      out.generators = {primitive_rotation(type.p), MobiusMap::inversion()};
      break;
    case GroupType::Tag::Tetrahedral: {
      double s = std::sqrt(2.0);
      out.generators = {primitive_rotation(3),
                        MobiusMap(-1.0, s, s, 1.0)};  // z -> (sqrt2-z)/(sqrt2 z+1)
      break;
    }
    case GroupType::Tag::Octahedral:
      out.generators = {MobiusMap::scaling(Complex(0, 1)),
                        MobiusMap(Complex(0, 1), 1.0, 1.0, Complex(0, 1))};
      break;
    case GroupType::Tag::Icosahedral: {
      // No generators in closed form; recover an order-3 element from the
      // stabilizer of the canonical 12-point vertex set, anchored by the
      // 5-fold rotation about the poles and the involution z -> -1/z.
      auto verts = PointConfig::canonical(icosahedral_vertex_set(), tol);
      MobiusMap r5 = primitive_rotation(5);
      MobiusMap flip(0.0, -1.0, 1.0, 0.0);  // z -> -1/z
      if (!is_invariant(r5, verts, tol) || !is_invariant(flip, verts, tol))
        throw ClosureFailure("icosahedral vertex set lost its symmetry");
      auto stab = compute_stabilizer(verts, tol);
      const MobiusMap* order3 = nullptr;
      for (const auto& f : stab.elements) {
        if (!mobius_equal(f, MobiusMap::identity(), tol) &&
            element_order(f, tol) == 3) {
          order3 = &f;
          break;
        }
      }
      if (!order3) throw ClosureFailure("no order-3 symmetry found");
      out.generators = {r5, flip, *order3};
      break;
    }
  }
  size_t expected = static_cast<size_t>(type.order());
  out.group = close_generators(out.generators, 10 * expected, tol);
  if (out.group.order() != expected)
    throw ClosureFailure("closure of " + type.str() + " has order " +
                         std::to_string(out.group.order()));
  return out;
}

PointConfig orbit(const SymmetryGroup& g, const SpherePoint& z, double tol) {
  std::vector<SpherePoint> pts;
  for (const auto& f : g.elements) {
    SpherePoint img = f(z);
    bool fresh = true;
    for (const auto& p : pts)
      if (p.approx_equal(img, tol)) {
        fresh = false;
        break;
      }
    if (fresh) pts.push_back(img);
  }
  return PointConfig::canonical(std::move(pts), tol);
}

std::vector<PointConfig> orbit_decomposition(const SymmetryGroup& g,
                                             const PointConfig& alpha,
                                             double tol) {
  for (const auto& f : g.elements)
    if (!is_invariant(f, alpha, tol))
      throw NotInvariantUnderGroup("configuration not fixed by the group");

  std::vector<char> seen(alpha.size(), 0);
  std::vector<PointConfig> parts;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (seen[i]) continue;
    std::vector<SpherePoint> pts;
    for (const auto& f : g.elements) {
      auto idx = alpha.find(f(alpha[i]), tol);
      if (idx && !seen[*idx]) {
        seen[*idx] = 1;
        pts.push_back(alpha[*idx]);
      }
    }
    parts.push_back(PointConfig::canonical(std::move(pts), tol));
  }
  return parts;
}

const PointConfig* ExceptionalOrbits::labeled(const std::string& name) const {
  for (const auto& [label, cfg] : orbits)
    if (label == name) return &cfg;
  return nullptr;
}

std::vector<size_t> ExceptionalOrbits::sizes() const {
  std::vector<size_t> out;
  for (const auto& [label, cfg] : orbits) out.push_back(cfg.size());
  std::sort(out.begin(), out.end());
  return out;
}

ExceptionalOrbits exceptional_orbits(const SymmetryGroup& g, double tol) {
  GroupType type = group_type(g);
  if (type.tag == GroupType::Tag::Trivial)
    throw InvalidRecipe("the trivial group has no exceptional orbits");

  // Fixed points of all nontrivial elements, merged into orbits.
  std::vector<SpherePoint> fps;
  for (const auto& f : g.elements) {
    if (mobius_equal(f, MobiusMap::identity(), tol)) continue;
    for (const auto& p : fixed_points(f, tol)) {
      bool fresh = true;
      for (const auto& q : fps)
        if (q.approx_equal(p, tol)) {
          fresh = false;
          break;
        }
      if (fresh) fps.push_back(p);
    }
  }

  std::vector<PointConfig> parts;
  std::vector<char> used(fps.size(), 0);
  for (size_t i = 0; i < fps.size(); ++i) {
    if (used[i]) continue;
    PointConfig orb = orbit(g, fps[i], tol);
    for (size_t j = 0; j < fps.size(); ++j)
      if (!used[j] && orb.contains(fps[j], tol)) used[j] = 1;
    parts.push_back(std::move(orb));
  }
  std::sort(parts.begin(), parts.end(),
            [](const PointConfig& a, const PointConfig& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return canonical_less(a[0], b[0]);
            });

  ExceptionalOrbits out;
  auto push = [&](const std::string& label, PointConfig cfg) {
    out.orbits.emplace_back(label, std::move(cfg));
  };

  switch (type.tag) {
    case GroupType::Tag::Icosahedral:
      for (auto& p : parts) {
        std::string label = p.size() == 12 ? "F" : p.size() == 20 ? "V" : "E";
        push(label, std::move(p));
      }
      break;
    case GroupType::Tag::Octahedral:
      for (auto& p : parts) {
        std::string label = p.size() == 6 ? "F" : p.size() == 8 ? "V" : "E";
        push(label, std::move(p));
      }
      break;
    case GroupType::Tag::Tetrahedral: {
      // The two 4-point orbits are interchangeable; the one containing the
      // canonically least point is called F.
      int four_seen = 0;
      for (auto& p : parts) {
        if (p.size() == 6) {
          push("E", std::move(p));
        } else {
          push(four_seen == 0 ? "F" : "V", std::move(p));
          ++four_seen;
        }
      }
      break;
    }
    case GroupType::Tag::Dihedral: {
      // Pole pair: the fixed points of a maximal-order rotation.
      const MobiusMap* rot = nullptr;
      for (const auto& f : g.elements)
        if (!mobius_equal(f, MobiusMap::identity(), tol) &&
            element_order(f, tol, std::max(kMaxElementOrder, (int)g.order())) ==
                type.p) {
          rot = &f;
          break;
        }
      if (!rot) throw UnrecognizedGroup("dihedral group without a p-rotation");
      auto poles = fixed_points(*rot, tol);
      // The two circle orbits are swapped by the normalizer; call the one
      // through 1 "A" so the standard model reproduces A_n literally.
      int a_index = -1;
      for (size_t i = 0; i < parts.size(); ++i) {
        bool is_pole = parts[i].size() == 2 &&
                       parts[i].contains(poles[0], tol) &&
                       parts[i].contains(poles[1], tol);
        if (!is_pole && a_index < 0 && parts[i].contains(SpherePoint(1.0), tol))
          a_index = static_cast<int>(i);
      }
      int ab_seen = 0;
      for (size_t i = 0; i < parts.size(); ++i) {
        auto& p = parts[i];
        bool is_pole = p.size() == 2 && p.contains(poles[0], tol) &&
                       p.contains(poles[1], tol);
        if (is_pole) {
          push("2", std::move(p));
        } else {
          std::string label;
          if (a_index >= 0)
            label = (static_cast<int>(i) == a_index) ? "A" : "B";
          else
            label = ab_seen == 0 ? "A" : "B";
          push(label, std::move(p));
          ++ab_seen;
        }
      }
      break;
    }
    case GroupType::Tag::Cyclic:
      for (auto& p : parts) push("1", std::move(p));
      break;
    case GroupType::Tag::Trivial:
      break;
  }
  return out;
}

namespace {

struct Recipe {
  std::vector<std::string> exceptional;  // labels to include
  int min_m = 0;
  int orbit_count(int m) const { return m; }
};

// Paper m-domains per family and label.  "B"/"C" means no exceptional
// orbit; for the polyhedral B label the orbit count is m + 1.
int validate_recipe(const GroupType& type, const std::string& label, int m,
                    std::vector<std::string>& exceptional) {
  auto fail = [&](const std::string& why) -> int {
    throw InvalidRecipe("recipe " + type.str() + " " + label + " m=" +
                        std::to_string(m) + ": " + why);
  };
  if (m < 0) fail("m must be nonnegative");

  switch (type.tag) {
    case GroupType::Tag::Icosahedral:
    case GroupType::Tag::Octahedral: {
      static const std::vector<std::string> ok{"F", "V", "E",  "FV",
                                               "VE", "EF", "FVE", "B"};
      if (std::find(ok.begin(), ok.end(), label) == ok.end())
        fail("unknown label");
      if (label == "B") {
        if (m < 0) fail("needs at least one orbit");
        return m + 1;  // (1+m)B
      }
      for (char c : label) exceptional.emplace_back(1, c);
      return m;
    }
    case GroupType::Tag::Tetrahedral: {
      if (label == "B") return m + 1;
      if (label == "V" || label == "VE" || label == "EF")
        fail("the V orbit is the F orbit under relabeling; use F");
      if (label == "F" || label == "E" || label == "FV" || label == "FVE") {
        if (m < 1) fail("this type needs at least one generic orbit");
      } else if (label != "FE") {
        fail("unknown label");
      }
      for (char c : label) exceptional.emplace_back(1, c);
      return m;
    }
    case GroupType::Tag::Dihedral: {
      if (label == "C") {
        if (m < 1) fail("mC needs at least one orbit");
        return m;
      }
      if (label == "A") {
        exceptional = {"A"};
        return m;
      }
      if (label == "AB") {
        if (m < 1) fail("A and B together need a generic orbit");
        exceptional = {"A", "B"};
        return m;
      }
      if (label == "2") {
        if (m < 1) fail("the pole pair alone needs a generic orbit");
        exceptional = {"2"};
        return m;
      }
      if (label == "A+2") {
        exceptional = {"A", "2"};
        return m;
      }
      if (label == "AB+2") {
        if (m < 1) fail("this type needs a generic orbit");
        exceptional = {"A", "B", "2"};
        return m;
      }
      fail("unknown label");
      return 0;
    }
    case GroupType::Tag::Cyclic: {
      if (label == "C") {
        if (m < 1) fail("mC needs at least one orbit");
        return m;
      }
      if (label == "1") {
        if (m < 1) fail("a single fixed point needs a generic orbit");
        exceptional = {"1"};
        return m;
      }
      if (label == "2") {
        if (m < 1) fail("the fixed pair alone needs a generic orbit");
        exceptional = {"1", "1"};
        return m;
      }
      fail("unknown label");
      return 0;
    }
    case GroupType::Tag::Trivial:
      fail("trivial group has no orbit types");
  }
  return 0;
}

}  // namespace

PointConfig build_config(const GroupType& type, const std::string& label,
                         int m, const std::vector<SpherePoint>& seeds,
                         double tol) {
  std::vector<std::string> wanted;
  int free_orbits = validate_recipe(type, label, m, wanted);

  StandardGroup std_model = standard_group(type, tol);
  ExceptionalOrbits exc = exceptional_orbits(std_model.group, tol);

  std::vector<SpherePoint> pts;
  {
    // Consume labeled orbits in order; "1" may appear twice for cyclic.
    std::vector<char> taken(exc.orbits.size(), 0);
    for (const auto& want : wanted) {
      bool found = false;
      for (size_t i = 0; i < exc.orbits.size(); ++i) {
        if (!taken[i] && exc.orbits[i].first == want) {
          for (const auto& p : exc.orbits[i].second.points()) pts.push_back(p);
          taken[i] = 1;
          found = true;
          break;
        }
      }
      if (!found)
        throw InvalidRecipe("standard model lacks an orbit labeled " + want);
    }
  }

  auto on_exceptional = [&](const SpherePoint& z) {
    for (const auto& [lab, cfg] : exc.orbits)
      if (cfg.contains(z, 10.0 * tol)) return true;
    return false;
  };
  auto already_used = [&](const SpherePoint& z) {
    for (const auto& p : pts)
      if (p.approx_equal(z, tol)) return true;
    return false;
  };

  size_t expected_orbit = std_model.group.order();
  int placed = 0;
  for (const auto& seed : seeds) {
    if (placed >= free_orbits) break;
    if (on_exceptional(seed))
      throw SeedOnExceptionalOrbit("seed lies on an exceptional orbit");
    if (already_used(seed))
      throw InvalidRecipe("seed repeats an orbit already in the configuration");
    PointConfig orb = orbit(std_model.group, seed, tol);
    if (orb.size() != expected_orbit)
      throw SeedOnExceptionalOrbit("seed orbit is smaller than the group");
    for (const auto& p : orb.points()) pts.push_back(p);
    ++placed;
  }

  // Deterministic generic fill-ins for missing seeds.
  static const Complex defaults[] = {
      {0.37, 0.11},  {1.93, -0.42}, {0.23, 1.31},  {-0.58, 0.77},
      {2.41, 0.35},  {-1.17, -0.89}, {0.66, -1.54}, {3.10, 1.20},
      {-2.23, 0.48}, {0.91, 2.05},  {1.37, -1.11}, {-0.29, -2.41}};
  size_t next_default = 0;
  while (placed < free_orbits) {
    if (next_default >= std::size(defaults))
      throw InvalidRecipe("ran out of generic seed candidates");
    SpherePoint cand(defaults[next_default++]);
    if (on_exceptional(cand) || already_used(cand)) continue;
    PointConfig orb = orbit(std_model.group, cand, tol);
    if (orb.size() != expected_orbit) continue;
    bool overlaps = false;
    for (const auto& p : orb.points())
      if (already_used(p)) {
        overlaps = true;
        break;
      }
    if (overlaps) continue;
    for (const auto& p : orb.points()) pts.push_back(p);
    ++placed;
  }

  if (pts.size() < 4)
    throw InvalidRecipe("configuration has fewer than 4 points");
  return PointConfig::canonical(std::move(pts), tol);
}

}  // namespace msym
