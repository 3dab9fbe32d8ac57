#pragma once

#include <optional>
#include <vector>

#include "msym/sphere.hpp"

namespace msym {

/// A finite set of distinct points on the sphere.  The stored order is the
/// implementation index used by permutations; canonical() sorts the points
/// (finite lexicographic, infinity last) so indices are reproducible.
class PointConfig {
 public:
  explicit PointConfig(std::vector<SpherePoint> pts, double tol = kDefaultTol);
  static PointConfig canonical(std::vector<SpherePoint> pts,
                               double tol = kDefaultTol);

  size_t size() const { return pts_.size(); }
  const SpherePoint& operator[](size_t i) const { return pts_[i]; }
  const std::vector<SpherePoint>& points() const { return pts_; }

  /// Index of the point within tol of z, if any.
  std::optional<size_t> find(const SpherePoint& z, double tol) const;
  bool contains(const SpherePoint& z, double tol) const {
    return find(z, tol).has_value();
  }

 private:
  void build_index();
  std::vector<SpherePoint> pts_;
  std::vector<std::pair<double, int>> keys_;  // sorted lookup keys
};

/// The group of Moebius maps fixing a configuration setwise, or any finite
/// closed set of maps (identity first, elements in a deterministic order).
/// perms is nonempty only for groups produced from a configuration.
struct SymmetryGroup {
  std::vector<MobiusMap> elements;
  std::vector<std::vector<int>> perms;
  double tol = kDefaultTol;

  size_t order() const { return elements.size(); }
  std::optional<size_t> find(const MobiusMap& f) const;
};

/// Enumerates every map sending the first three points of alpha to an
/// ordered triple of alpha and keeps those that fix alpha setwise.
SymmetryGroup compute_stabilizer(const PointConfig& alpha,
                                 double tol = kDefaultTol);

/// True iff f maps alpha onto alpha bijectively within tol.
bool is_invariant(const MobiusMap& f, const PointConfig& alpha, double tol);

/// sigma with f(alpha[k]) = alpha[sigma[k]].
std::vector<int> permutation_of(const MobiusMap& f, const PointConfig& alpha,
                                double tol = kDefaultTol);

/// Least k >= 1 with f^k = identity.
int element_order(const MobiusMap& f, double tol = kDefaultTol,
                  int max_order = kMaxElementOrder);

std::vector<int> cycle_type(const std::vector<int>& perm);

}  // namespace msym
