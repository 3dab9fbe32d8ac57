#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msym/classify.hpp"

namespace msym {

/// A concrete model of one of the five finite families, with generators and
/// their closure.
struct StandardGroup {
  GroupType type;
  std::vector<MobiusMap> generators;
  SymmetryGroup group;
};

/// Closes a generator set under composition.  Throws ClosureFailure when the
/// closure does not stabilize within the cap.
SymmetryGroup close_generators(const std::vector<MobiusMap>& gens,
                               size_t max_order_cap, double tol = kDefaultTol);

StandardGroup standard_group(const GroupType& type, double tol = kDefaultTol);

PointConfig orbit(const SymmetryGroup& g, const SpherePoint& z,
                  double tol = kDefaultTol);

/// Partition of alpha into orbits of g; alpha must be invariant.
std::vector<PointConfig> orbit_decomposition(const SymmetryGroup& g,
                                             const PointConfig& alpha,
                                             double tol = kDefaultTol);

/// Orbits of fixed points of the nontrivial elements, with family-specific
/// labels: F/V/E for the polyhedral groups, 2 (pole pair) and A/B for the
/// dihedral ones, 1 for each cyclic fixed point.
struct ExceptionalOrbits {
  std::vector<std::pair<std::string, PointConfig>> orbits;

  const PointConfig* labeled(const std::string& name) const;
  std::vector<size_t> sizes() const;
};

ExceptionalOrbits exceptional_orbits(const SymmetryGroup& g,
                                     double tol = kDefaultTol);

/// Builds a witness configuration of the requested orbit type: the union of
/// the named exceptional orbits of the standard model and m generic orbits.
/// Missing seeds are filled with deterministic generic points.  Labels:
///   polyhedral: "F", "V", "E", "FV", "VE", "EF"/"FE", "FVE", "B"
///   dihedral:   "C", "A", "AB", "2", "A+2", "AB+2"
///   cyclic:     "C", "1", "2"
PointConfig build_config(const GroupType& type, const std::string& label,
                         int m, const std::vector<SpherePoint>& seeds = {},
                         double tol = kDefaultTol);

/// Roots of a polynomial (ascending coefficients) via the companion matrix,
/// polished by a Newton step.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

}  // namespace msym
