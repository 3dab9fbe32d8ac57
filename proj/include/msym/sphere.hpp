#pragma once

#include <array>
#include <complex>
#include <vector>

#include "msym/errors.hpp"

namespace msym {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kMaxElementOrder = 60;

/// A point of the Riemann sphere in homogeneous coordinates (a : b).
/// The point is a/b, with b = 0 meaning infinity.  Stored canonically as
/// (z, 1) for finite points and (1, 0) for infinity, so arithmetic never
/// needs a special case for the pole.
class SpherePoint {
 public:
  SpherePoint() : a_(0.0, 0.0), b_(1.0, 0.0) {}
  SpherePoint(Complex z) : a_(z), b_(1.0, 0.0) { canonicalize(); }
  SpherePoint(double x) : SpherePoint(Complex(x, 0.0)) {}

  static SpherePoint infinity() {
    SpherePoint p;
    p.a_ = Complex(1.0, 0.0);
    p.b_ = Complex(0.0, 0.0);
    return p;
  }
  static SpherePoint homogeneous(Complex a, Complex b);

  bool is_infinity() const { return b_ == Complex(0.0, 0.0); }
  /// Finite value; only meaningful when !is_infinity().
  Complex value() const { return a_; }
  Complex a() const { return a_; }
  Complex b() const { return b_; }

  /// Chordal distance |a1 b2 - a2 b1| / (|p1| |p2|), Moebius-friendly near
  /// the pole.  Ranges over [0, 1].
  double chordal(const SpherePoint& o) const;
  bool approx_equal(const SpherePoint& o, double tol = kDefaultTol) const {
    return chordal(o) < tol;
  }

 private:
  void canonicalize();
  Complex a_, b_;
};

/// Deterministic ordering: finite points lexicographically by (re, im),
/// infinity last.
bool canonical_less(const SpherePoint& lhs, const SpherePoint& rhs);

/// An element of PSL(2, C): an invertible 2x2 complex matrix modulo scalars.
/// Stored with det = 1 and a deterministic sign, so maps compare equal iff
/// the normalized matrices agree up to global sign.
class MobiusMap {
 public:
  MobiusMap() : m_{Complex(1), Complex(0), Complex(0), Complex(1)} {}
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return MobiusMap(); }
  /// z -> w z
  static MobiusMap scaling(Complex w) { return MobiusMap(w, 0.0, 0.0, 1.0); }
  /// z -> 1/z
  static MobiusMap inversion() { return MobiusMap(0.0, 1.0, 1.0, 0.0); }

  Complex a() const { return m_[0]; }
  Complex b() const { return m_[1]; }
  Complex c() const { return m_[2]; }
  Complex d() const { return m_[3]; }
  Complex trace() const { return m_[0] + m_[3]; }
  const std::array<Complex, 4>& entries() const { return m_; }

  SpherePoint operator()(const SpherePoint& z) const;

 private:
  std::array<Complex, 4> m_;
};

SpherePoint apply(const MobiusMap& f, const SpherePoint& z);
MobiusMap compose(const MobiusMap& f, const MobiusMap& g);
MobiusMap inverse(const MobiusMap& f);
bool mobius_equal(const MobiusMap& f, const MobiusMap& g,
                  double tol = kDefaultTol);

/// Cross-ratio [z1, z2, z3, z4]: the image of z3 under the unique map
/// sending (z1, z2, z4) to (0, 1, infinity).  Normalized so that
/// [0, 1, lambda, infinity] = lambda.
SpherePoint cross_ratio(const SpherePoint& z1, const SpherePoint& z2,
                        const SpherePoint& z3, const SpherePoint& z4,
                        double tol = kDefaultTol);

/// The unique map with src[i] -> dst[i], i = 0, 1, 2.
MobiusMap mobius_from_triple(const std::array<SpherePoint, 3>& src,
                             const std::array<SpherePoint, 3>& dst,
                             double tol = kDefaultTol);

/// Fixed points of a non-identity map: two for non-parabolic elements,
/// one for parabolic ones.  Finite-order elements always get two.
std::vector<SpherePoint> fixed_points(const MobiusMap& f,
                                      double tol = kDefaultTol);

/// Rotation data of an elliptic element of finite order: conjugating
/// anchor -> 0 and other_fixed -> infinity turns the map into
/// z -> exp(2 pi i q / p) z.  Swapping the anchors replaces q by p - q.
struct RotationData {
  int order_p;
  int q;  // in [1, p-1], coprime to p
  SpherePoint anchor;
  SpherePoint other_fixed;
};

RotationData rotation_data(const MobiusMap& f, const SpherePoint& anchor,
                           double tol = kDefaultTol,
                           int max_order = kMaxElementOrder);

/// Multiplier (derivative) of f at one of its fixed points.
Complex multiplier_at(const MobiusMap& f, const SpherePoint& fixed);

}  // namespace msym
