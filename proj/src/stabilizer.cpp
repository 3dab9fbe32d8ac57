#include "msym/stabilizer.hpp"

#include <algorithm>
#include <cmath>

namespace msym {

namespace {

// Scalar lookup key: a skewed linear functional of the unit-sphere embedding.
// Two points within chordal distance d have keys within ~2.5 d.
double lookup_key(const SpherePoint& p) {
  double x, y, z;
  if (p.is_infinity()) {
    x = 0.0;
    y = 0.0;
    z = 1.0;
  } else {
    Complex v = p.value();
    double n2 = std::norm(v);
    double den = 1.0 + n2;
    x = 2.0 * v.real() / den;
    y = 2.0 * v.imag() / den;
    z = (n2 - 1.0) / den;
  }
  return x + 0.6180339887498949 * y + 0.4142135623730951 * z;
}

bool invariant_with_scratch(const MobiusMap& f, const PointConfig& alpha,
                            double tol, std::vector<char>& used) {
  const size_t n = alpha.size();
  std::fill(used.begin(), used.end(), 0);
  for (size_t k = 0; k < n; ++k) {
    auto idx = alpha.find(f(alpha[k]), tol);
    if (!idx || used[*idx]) return false;
    used[*idx] = 1;
  }
  return true;
}

// Deterministic total order on normalized matrices.
bool matrix_less(const MobiusMap& f, const MobiusMap& g) {
  for (size_t i = 0; i < 4; ++i) {
    const Complex &a = f.entries()[i], &b = g.entries()[i];
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
  }
  return false;
}

double matrix_distance(const MobiusMap& f, const MobiusMap& g) {
  double dminus = 0.0, dplus = 0.0;
  for (size_t i = 0; i < 4; ++i) {
    dminus += std::norm(f.entries()[i] - g.entries()[i]);
    dplus += std::norm(f.entries()[i] + g.entries()[i]);
  }
  return std::sqrt(std::min(dminus, dplus));
}

}  // namespace

PointConfig::PointConfig(std::vector<SpherePoint> pts, double tol)
    : pts_(std::move(pts)) {
  if (pts_.empty()) throw DegenerateInput("empty point configuration");
  for (size_t i = 0; i < pts_.size(); ++i)
    for (size_t j = i + 1; j < pts_.size(); ++j)
      if (pts_[i].approx_equal(pts_[j], tol))
        throw DegenerateInput("duplicate points at indices " +
                              std::to_string(i) + " and " + std::to_string(j));
  build_index();
}

PointConfig PointConfig::canonical(std::vector<SpherePoint> pts, double tol) {
  std::sort(pts.begin(), pts.end(), canonical_less);
  return PointConfig(std::move(pts), tol);
}

void PointConfig::build_index() {
  keys_.reserve(pts_.size());
  for (size_t i = 0; i < pts_.size(); ++i)
    keys_.emplace_back(lookup_key(pts_[i]), static_cast<int>(i));
  std::sort(keys_.begin(), keys_.end());
}

std::optional<size_t> PointConfig::find(const SpherePoint& z,
                                        double tol) const {
  double key = lookup_key(z);
  double window = 2.6 * tol + 1e-12;
  auto lo = std::lower_bound(keys_.begin(), keys_.end(),
                             std::make_pair(key - window, -1));
  for (auto it = lo; it != keys_.end() && it->first <= key + window; ++it) {
    if (pts_[it->second].approx_equal(z, tol)) return it->second;
  }
  return std::nullopt;
}

std::optional<size_t> SymmetryGroup::find(const MobiusMap& f) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (mobius_equal(elements[i], f, tol)) return i;
  return std::nullopt;
}

bool is_invariant(const MobiusMap& f, const PointConfig& alpha, double tol) {
  std::vector<char> used(alpha.size(), 0);
  return invariant_with_scratch(f, alpha, tol, used);
}

std::vector<int> permutation_of(const MobiusMap& f, const PointConfig& alpha,
                                double tol) {
  const size_t n = alpha.size();
  std::vector<int> sigma(n, -1);
  std::vector<char> used(n, 0);
  for (size_t k = 0; k < n; ++k) {
    auto idx = alpha.find(f(alpha[k]), tol);
    if (!idx || used[*idx])
      throw NotInvariant("map does not permute the configuration");
    used[*idx] = 1;
    sigma[k] = static_cast<int>(*idx);
  }
  return sigma;
}

SymmetryGroup compute_stabilizer(const PointConfig& alpha, double tol) {
  const size_t n = alpha.size();
  if (n <= 2)
    throw InfiniteStabilizer(
        "configurations with fewer than 3 points have infinite stabilizer");

  const std::array<SpherePoint, 3> base{alpha[0], alpha[1], alpha[2]};
  std::vector<MobiusMap> found;
  std::vector<char> scratch(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        MobiusMap cand =
            mobius_from_triple(base, {alpha[i], alpha[j], alpha[k]}, tol);
        if (invariant_with_scratch(cand, alpha, tol, scratch))
          found.push_back(cand);
      }
    }
  }

  // Deduplicate; distances between tol and 10 tol mean nothing can be
  // trusted at this tolerance.
  std::sort(found.begin(), found.end(), matrix_less);
  std::vector<MobiusMap> elems;
  for (const auto& f : found) {
    bool fresh = true;
    for (const auto& e : elems) {
      double d = matrix_distance(e, f);
      if (d < tol) {
        fresh = false;
        break;
      }
      if (d < 10.0 * tol)
        throw ToleranceBreakdown("candidate maps separated by less than 10x "
                                 "tolerance");
    }
    if (fresh) elems.push_back(f);
  }

  // Identity first.
  auto id = MobiusMap::identity();
  auto it = std::find_if(elems.begin(), elems.end(), [&](const MobiusMap& f) {
    return mobius_equal(f, id, tol);
  });
  if (it == elems.end())
    throw ToleranceBreakdown("identity not recovered by the search");
  std::rotate(elems.begin(), it, it + 1);

  SymmetryGroup group;
  group.tol = tol;
  group.elements = std::move(elems);

  // Closure sanity: every product must land back on a known element.
  for (const auto& f : group.elements) {
    for (const auto& g : group.elements) {
      MobiusMap h = compose(f, g);
      bool matched = false;
      for (const auto& e : group.elements) {
        double d = matrix_distance(e, h);
        if (d < tol) {
          matched = true;
          break;
        }
        if (d < 10.0 * tol)
          throw ToleranceBreakdown("closure product in the ambiguous band");
      }
      if (!matched) throw ToleranceBreakdown("stabilizer is not closed");
    }
  }

  group.perms.reserve(group.order());
  for (const auto& f : group.elements)
    group.perms.push_back(permutation_of(f, alpha, tol));
  return group;
}

int element_order(const MobiusMap& f, double tol, int max_order) {
  if (mobius_equal(f, MobiusMap::identity(), tol)) return 1;
  auto fps = fixed_points(f, tol);
  if (fps.size() == 1) throw NotFiniteOrder("parabolic element");
  return rotation_data(f, fps[0], tol, max_order).order_p;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

}  // namespace msym
