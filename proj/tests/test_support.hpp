#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "msym/sphere.hpp"

namespace msym::test {

inline Complex unit_root(int k, int n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * k / n);
}

inline std::vector<SpherePoint> roots_of_unity(int n, Complex scale = 1.0) {
  std::vector<SpherePoint> out;
  for (int k = 0; k < n; ++k) out.emplace_back(scale * unit_root(k, n));
  return out;
}

inline SpherePoint random_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  return SpherePoint(Complex(box(rng), box(rng)));
}

inline MobiusMap random_mobius(std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  while (true) {
    Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    Complex c(g(rng), g(rng)), d(g(rng), g(rng));
    if (std::abs(a * d - b * c) > 0.3) return MobiusMap(a, b, c, d);
  }
}

}  // namespace msym::test
