#include "msym/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace msym {

namespace {

void check_domain(const std::vector<Complex>& coords) {
  for (size_t i = 0; i < coords.size(); ++i) {
    const Complex& z = coords[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NotInKn("coordinate is not finite");
    if (std::abs(z) < kDomainTol || std::abs(z - 1.0) < kDomainTol)
      throw NotInKn("coordinate too close to 0 or 1");
    for (size_t j = i + 1; j < coords.size(); ++j)
      if (std::abs(z - coords[j]) < kDomainTol)
        throw NotInKn("coordinates too close to each other");
  }
}

}  // namespace

LambdaVector::LambdaVector(std::vector<Complex> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) throw NotInKn("need at least one coordinate (n >= 4)");
  check_domain(coords_);
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = (int)i;
  return inv;
}

Perm compose_perm(const Perm& outer, const Perm& inner) {
  Perm out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i)
    out[i] = outer[static_cast<size_t>(inner[i])];
  return out;
}

PointConfig lambda_config(const LambdaVector& lambda) {
  std::vector<SpherePoint> pts{SpherePoint(0.0), SpherePoint(1.0),
                               SpherePoint::infinity()};
  for (const auto& z : lambda.coords()) pts.emplace_back(z);
  return PointConfig(std::move(pts));
}

MobiusMap f_sigma(const LambdaVector& lambda, const Perm& sigma) {
  if (sigma.size() != lambda.n())
    throw UnsupportedSigma("permutation size does not match n");
  PointConfig cfg = lambda_config(lambda);
  Perm inv = inverse_perm(sigma);
  return mobius_from_triple({cfg[inv[0]], cfg[inv[1]], cfg[inv[2]]},
                            {SpherePoint(0.0), SpherePoint(1.0),
                             SpherePoint::infinity()});
}

LambdaVector g_sigma(const LambdaVector& lambda, const Perm& sigma) {
  PointConfig cfg = lambda_config(lambda);
  MobiusMap f = f_sigma(lambda, sigma);
  Perm inv = inverse_perm(sigma);
  std::vector<Complex> out;
  out.reserve(lambda.dim());
  for (size_t i = 3; i < lambda.n(); ++i) {
    SpherePoint img = f(cfg[inv[i]]);
    if (img.is_infinity())
      throw NotInKn("relabeled coordinate landed on infinity");
    out.push_back(img.value());
  }
  return LambdaVector(std::move(out));
}

Complex apply_h(HMap h, Complex z) {
  switch (h) {
    case HMap::Id: return z;
    case HMap::OneMinusL: return 1.0 - z;
    case HMap::InvL: return 1.0 / z;
    case HMap::LOverLMinus1: return z / (z - 1.0);
    case HMap::LMinus1OverL: return (z - 1.0) / z;
    case HMap::InvOneMinusL: return 1.0 / (1.0 - z);
  }
  return z;
}

LambdaVector g_sigma_closed_form(const LambdaVector& lambda,
                                 const CosetRep& rep, HMap h,
                                 const Perm& tau) {
  const size_t d = lambda.dim();
  // First the V part: mu_i = h(lambda_{tau(i)}).
  std::vector<Complex> mu(d);
  for (size_t i = 0; i < d; ++i) {
    size_t src = tau.empty() ? i : static_cast<size_t>(tau[i]);
    if (src >= d) throw UnsupportedSigma("tau is not a tail permutation");
    mu[i] = apply_h(h, lambda[src]);
  }

  auto coord = [&](int label) -> Complex {
    if (label < 4 || label > static_cast<int>(d) + 3)
      throw UnsupportedSigma("coset label out of range");
    return mu[static_cast<size_t>(label - 4)];
  };

  std::vector<Complex> out(d);
  const Complex one(1.0, 0.0);
  using Kind = CosetRep::Kind;
  for (size_t idx = 0; idx < d; ++idx) {
    int k = static_cast<int>(idx) + 1;  // paper's coordinate index
    Complex lk = mu[idx];
    switch (rep.kind) {
      case Kind::E:
        out[idx] = lk;
        break;
      case Kind::S1: {
        Complex lp = coord(rep.p);
        out[idx] = (k == rep.p - 3) ? -lp / (one - lp) : (lk - lp) / (one - lp);
        break;
      }
      case Kind::S2: {
        Complex lp = coord(rep.p);
        out[idx] = (k == rep.p - 3) ? one / lp : lk / lp;
        break;
      }
      case Kind::S3: {
        // The k = p-3 coordinate is f(infinity) = 1 - lambda_{p-3}; the
        // printed table value (lambda-1)/lambda fails g.g = id.
        Complex lp = coord(rep.p);
        out[idx] = (k == rep.p - 3) ? one - lp : lk * (one - lp) / (lk - lp);
        break;
      }
      case Kind::S12: {
        Complex lp = coord(rep.p), lq = coord(rep.q);
        if (k == rep.p - 3)
          out[idx] = -lp / (lq - lp);
        else if (k == rep.q - 3)
          out[idx] = (one - lp) / (lq - lp);
        else
          out[idx] = (lk - lp) / (lq - lp);
        break;
      }
      case Kind::S23: {
        Complex lp = coord(rep.p), lq = coord(rep.q);
        if (k == rep.p - 3)
          out[idx] = (lp - lq) / (lp * (one - lq));
        else if (k == rep.q - 3)
          out[idx] = (lp - lq) / lp;
        else
          out[idx] = (lp - lq) * lk / (lp * (lk - lq));
        break;
      }
      case Kind::S31: {
        Complex lp = coord(rep.p), lq = coord(rep.q);
        if (k == rep.p - 3)
          out[idx] = (lp - one) / (lq - one);
        else if (k == rep.q - 3)
          out[idx] = (lp - one) * lq / ((lq - one) * lp);
        else
          out[idx] = (lp - one) * (lk - lq) / ((lq - one) * (lk - lp));
        break;
      }
      case Kind::S123: {
        Complex lp = coord(rep.p), lq = coord(rep.q), lr = coord(rep.r);
        if (k == rep.p - 3)
          out[idx] = (lq - lr) * lp / ((lq - lp) * lr);
        else if (k == rep.q - 3)
          out[idx] = (lq - lr) * (one - lp) / ((lq - lp) * (one - lr));
        else if (k == rep.r - 3)
          out[idx] = (lq - lr) / (lq - lp);
        else
          out[idx] = (lq - lr) * (lk - lp) / ((lq - lp) * (lk - lr));
        break;
      }
    }
  }
  return LambdaVector(std::move(out));
}

std::vector<Perm> stabilizer_perms(const LambdaVector& lambda, double tol) {
  if (lambda.n() < 5)
    throw NotInKn("stabilizer permutations need n >= 5");
  PointConfig cfg = lambda_config(lambda);
  SymmetryGroup g = compute_stabilizer(cfg, tol);
  std::vector<Perm> out = g.perms;
  for (const auto& sigma : out) {
    LambdaVector image = g_sigma(lambda, sigma);
    if (!lambda_approx_equal(image, lambda, std::max(tol, 1e-8) * 10.0))
      throw ToleranceBreakdown("stabilizer permutation does not fix lambda");
  }
  return out;
}

Eigen::MatrixXcd jacobian(const LambdaVector& lambda, const Perm& sigma,
                          double h) {
  const size_t d = lambda.dim();
  Eigen::MatrixXcd J(d, d);

  auto displaced = [&](size_t i, Complex dz) {
    std::vector<Complex> c = lambda.coords();
    c[i] += dz;
    try {
      return LambdaVector(std::move(c));
    } catch (const NotInKn&) {
      throw StepTooLarge("finite-difference step leaves the domain");
    }
  };

  double worst_residual = 0.0;
  for (size_t i = 0; i < d; ++i) {
    auto gp = g_sigma(displaced(i, Complex(h, 0.0)), sigma);
    auto gm = g_sigma(displaced(i, Complex(-h, 0.0)), sigma);
    auto gip = g_sigma(displaced(i, Complex(0.0, h)), sigma);
    auto gim = g_sigma(displaced(i, Complex(0.0, -h)), sigma);
    for (size_t j = 0; j < d; ++j) {
      Complex dre = (gp[j] - gm[j]) / (2.0 * h);
      Complex dim = (gip[j] - gim[j]) / (Complex(0.0, 2.0 * h));
      double scale = std::max(1.0, std::max(std::abs(dre), std::abs(dim)));
      worst_residual = std::max(worst_residual, std::abs(dre - dim) / scale);
      J(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          (dre + dim) / 2.0;
    }
  }
  if (worst_residual > 1e-5)
    throw Error("Cauchy-Riemann residual " + std::to_string(worst_residual) +
                " exceeds 1e-5; map is not holomorphic at this scale");
  return J;
}

LambdaVector lambda_from_config(const PointConfig& alpha, double tol) {
  const size_t n = alpha.size();
  if (n < 4) throw NotInKn("need at least 4 points");

  // Score a normalization by the worst chordal gap of its coordinates to
  // {0, 1, infinity} and to each other; search triples from a spread of
  // probe indices.
  const size_t probe_count = std::min<size_t>(n, 8);
  std::vector<size_t> probe(probe_count);
  for (size_t t = 0; t < probe_count; ++t)
    probe[t] = probe_count == 1 ? 0 : t * (n - 1) / (probe_count - 1);
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());

  double best_score = -1.0;
  std::vector<Complex> best;
  const SpherePoint zero(0.0), one(1.0), inf = SpherePoint::infinity();

  for (size_t i : probe) {
    for (size_t j : probe) {
      if (j == i) continue;
      for (size_t k : probe) {
        if (k == i || k == j) continue;
        MobiusMap psi =
            mobius_from_triple({alpha[i], alpha[j], alpha[k]},
                               {zero, one, inf}, tol);
        std::vector<SpherePoint> imgs;
        double score = 1.0;
        for (size_t t = 0; t < n; ++t) {
          if (t == i || t == j || t == k) continue;
          SpherePoint w = psi(alpha[t]);
          score = std::min({score, w.chordal(zero), w.chordal(one),
                            w.chordal(inf)});
          for (const auto& prev : imgs) score = std::min(score, w.chordal(prev));
          imgs.push_back(w);
        }
        if (score > best_score) {
          best_score = score;
          best.clear();
          for (const auto& w : imgs) best.push_back(w.value());
        }
      }
    }
  }
  if (best_score < kDomainTol)
    throw NotInKn("no normalization triple yields domain coordinates");
  return LambdaVector(std::move(best));
}

bool lambda_approx_equal(const LambdaVector& a, const LambdaVector& b,
                         double tol) {
  if (a.dim() != b.dim()) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    if (!SpherePoint(a[i]).approx_equal(SpherePoint(b[i]), tol)) return false;
  return true;
}

}  // namespace msym
