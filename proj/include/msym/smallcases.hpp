#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msym/reptheory.hpp"

namespace msym {

/// Result of the explicit n = 4, 5, 6 decision trees.  The group always
/// comes from the brute-force stabilizer; the case path and normalizing map
/// are layered on top as a verified witness.
struct SmallCaseReport {
  std::string case_path;           // e.g. "5(d)i"
  std::string route;               // secondary reading, e.g. "4(c)" for n=5
  GroupType type;
  size_t order = 1;
  std::optional<MobiusMap> psi;    // maps the input to the case normal form
  std::optional<MultiplicityVector> multvec;
  std::vector<LabeledVector> alternates;
  std::optional<Complex> parameter_a;  // the a of the normal form, if any
  std::optional<Complex> parameter_b;  // the b of {±1, ±a, ±b}
};

/// {lambda, 1-lambda, 1/lambda, lambda/(lambda-1), (lambda-1)/lambda,
/// 1/(1-lambda)}, deduplicated.  Size 6 except on the two exceptional
/// orbits {2, 1/2, -1} (size 3) and {(1±sqrt3 i)/2} (size 2).
std::vector<Complex> cross_ratio_orbit(Complex lambda,
                                       double tol = kDefaultTol);

SmallCaseReport classify4(const PointConfig& alpha, double tol = kDefaultTol);
SmallCaseReport classify5(const PointConfig& alpha, double tol = kDefaultTol);
SmallCaseReport classify6(const PointConfig& alpha, double tol = kDefaultTol);

/// Searches for a map with psi(alpha) = target (as sets).
std::optional<MobiusMap> find_normalizer(const PointConfig& alpha,
                                         const PointConfig& target,
                                         double tol = kDefaultTol);

}  // namespace msym
