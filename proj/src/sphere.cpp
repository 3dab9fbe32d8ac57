#include "msym/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace msym {

namespace {

constexpr double kCanonEps = 1e-14;

double norm2(const Complex& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

}  // namespace

void SpherePoint::canonicalize() {
  double s = std::max(std::abs(a_), std::abs(b_));
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DegenerateInput("sphere point with zero or non-finite coordinates");
  }
  if (std::abs(b_) <= kCanonEps * s) {
    a_ = Complex(1.0, 0.0);
    b_ = Complex(0.0, 0.0);
  } else {
    a_ /= b_;
    b_ = Complex(1.0, 0.0);
  }
}

SpherePoint SpherePoint::homogeneous(Complex a, Complex b) {
  SpherePoint p;
  p.a_ = a;
  p.b_ = b;
  p.canonicalize();
  return p;
}

double SpherePoint::chordal(const SpherePoint& o) const {
  double num = std::abs(a_ * o.b_ - o.a_ * b_);
  double den = std::sqrt(norm2(a_) + norm2(b_)) *
               std::sqrt(norm2(o.a_) + norm2(o.b_));
  return num / den;
}

bool canonical_less(const SpherePoint& lhs, const SpherePoint& rhs) {
  if (lhs.is_infinity()) return false;
  if (rhs.is_infinity()) return true;
  Complex a = lhs.value(), b = rhs.value();
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d)
    : m_{a, b, c, d} {
  Complex det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(scale > 0.0) || !std::isfinite(scale) ||
      std::abs(det) < 1e-200 * scale * scale) {
    throw DegenerateInput("singular matrix for a Moebius map");
  }
  Complex s = std::sqrt(det);
  for (auto& e : m_) e /= s;
  // Deterministic sign: make the largest-modulus entry point into the
  // right half plane (imag-positive on the boundary).
  size_t imax = 0;
  double best = 0.0;
  for (size_t i = 0; i < 4; ++i) {
    double v = std::abs(m_[i]);
    if (v > best) {
      best = v;
      imax = i;
    }
  }
  const Complex& e = m_[imax];
  if (e.real() < -1e-12 * best ||
      (std::abs(e.real()) <= 1e-12 * best && e.imag() < 0.0)) {
    for (auto& x : m_) x = -x;
  }
}

SpherePoint MobiusMap::operator()(const SpherePoint& z) const {
  return SpherePoint::homogeneous(m_[0] * z.a() + m_[1] * z.b(),
                                  m_[2] * z.a() + m_[3] * z.b());
}

SpherePoint apply(const MobiusMap& f, const SpherePoint& z) { return f(z); }

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap(f.a() * g.a() + f.b() * g.c(),
                   f.a() * g.b() + f.b() * g.d(),
                   f.c() * g.a() + f.d() * g.c(),
                   f.c() * g.b() + f.d() * g.d());
}

MobiusMap inverse(const MobiusMap& f) {
  return MobiusMap(f.d(), -f.b(), -f.c(), f.a());
}

bool mobius_equal(const MobiusMap& f, const MobiusMap& g, double tol) {
  double dminus = 0.0, dplus = 0.0;
  for (size_t i = 0; i < 4; ++i) {
    dminus += norm2(f.entries()[i] - g.entries()[i]);
    dplus += norm2(f.entries()[i] + g.entries()[i]);
  }
  return std::sqrt(std::min(dminus, dplus)) < tol;
}

SpherePoint cross_ratio(const SpherePoint& z1, const SpherePoint& z2,
                        const SpherePoint& z3, const SpherePoint& z4,
                        double tol) {
  const SpherePoint* pts[4] = {&z1, &z2, &z3, &z4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i]->approx_equal(*pts[j], tol))
        throw DegenerateInput("cross-ratio of coincident points");

  auto det = [](const SpherePoint& p, const SpherePoint& q) {
    return p.a() * q.b() - q.a() * p.b();
  };
  // Image of z3 under the map (z1, z2, z4) -> (0, 1, infinity).
  Complex num = det(z3, z1) * det(z2, z4);
  Complex den = det(z3, z4) * det(z2, z1);
  return SpherePoint::homogeneous(num, den);
}

MobiusMap mobius_from_triple(const std::array<SpherePoint, 3>& src,
                             const std::array<SpherePoint, 3>& dst,
                             double tol) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (src[i].approx_equal(src[j], tol) || dst[i].approx_equal(dst[j], tol))
        throw DegenerateInput("repeated point in a triple");

  // Matrix sending (p, q, r) -> (0, 1, infinity).
  auto to_standard = [](const std::array<SpherePoint, 3>& t) {
    const SpherePoint &p = t[0], &q = t[1], &r = t[2];
    Complex A = q.a() * r.b() - r.a() * q.b();
    Complex B = q.a() * p.b() - p.a() * q.b();
    return std::array<Complex, 4>{p.b() * A, -p.a() * A, r.b() * B,
                                  -r.a() * B};
  };
  auto S = to_standard(src);
  auto D = to_standard(dst);
  // dst_map^{-1} * src_map, with the inverse taken projectively (adjugate).
  return MobiusMap(D[3] * S[0] - D[1] * S[2], D[3] * S[1] - D[1] * S[3],
                   -D[2] * S[0] + D[0] * S[2], -D[2] * S[1] + D[0] * S[3]);
}

std::vector<SpherePoint> fixed_points(const MobiusMap& f, double tol) {
  if (mobius_equal(f, MobiusMap::identity(), tol))
    throw IdentityMap("fixed points of the identity are everything");

  Complex tr = f.trace();
  Complex disc = tr * tr - 4.0;  // det is 1
  auto eigvec = [&](Complex lambda) {
    Complex v1a = f.b(), v1b = lambda - f.a();
    Complex v2a = lambda - f.d(), v2b = f.c();
    if (norm2(v1a) + norm2(v1b) >= norm2(v2a) + norm2(v2b))
      return SpherePoint::homogeneous(v1a, v1b);
    return SpherePoint::homogeneous(v2a, v2b);
  };

  std::vector<SpherePoint> out;
  if (std::abs(disc) <= 1e-12) {
    out.push_back(eigvec(tr / 2.0));
  } else {
    Complex root = std::sqrt(disc);
    out.push_back(eigvec((tr + root) / 2.0));
    out.push_back(eigvec((tr - root) / 2.0));
    if (canonical_less(out[1], out[0])) std::swap(out[0], out[1]);
  }
  return out;
}

Complex multiplier_at(const MobiusMap& f, const SpherePoint& fixed) {
  if (fixed.is_infinity()) return 1.0 / (f.a() * f.a());
  Complex q = f.c() * fixed.value() + f.d();
  return 1.0 / (q * q);
}

RotationData rotation_data(const MobiusMap& f, const SpherePoint& anchor,
                           double tol, int max_order) {
  auto fps = fixed_points(f, tol);
  if (fps.size() == 1) throw NotFiniteOrder("parabolic element");

  int which = -1;
  for (int i = 0; i < 2; ++i)
    if (fps[i].approx_equal(anchor, std::max(tol, 1e-9) * 10.0)) which = i;
  if (which < 0) throw AnchorNotFixed("anchor is not a fixed point");

  Complex mu = multiplier_at(f, fps[which]);
  if (std::abs(std::abs(mu) - 1.0) > 1e-6)
    throw NotFiniteOrder("multiplier off the unit circle");

  for (int p = 2; p <= max_order; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      Complex target = std::polar(1.0, 2.0 * std::numbers::pi * q / p);
      if (std::abs(mu - target) < std::max(tol, 1e-12)) {
        return RotationData{p, q, fps[which], fps[1 - which]};
      }
    }
  }
  throw NotFiniteOrder("no rational rotation angle within tolerance");
}

}  // namespace msym
