#pragma once

#include <Eigen/Core>
#include <vector>

#include "msym/stabilizer.hpp"

namespace msym {

/// Membership tolerance for the coordinate domain: coordinates this close
/// to 0, 1 or each other are rejected (derivatives of the coordinate maps
/// blow up at the boundary).
inline constexpr double kDomainTol = 1e-7;

/// A point of K_n: n-3 complex coordinates, none equal to 0 or 1 and all
/// pairwise distinct.  Encodes the n-point configuration
/// {0, 1, infinity, lambda_1, ..., lambda_{n-3}}.
class LambdaVector {
 public:
  explicit LambdaVector(std::vector<Complex> coords);

  size_t dim() const { return coords_.size(); }
  size_t n() const { return coords_.size() + 3; }
  const std::vector<Complex>& coords() const { return coords_; }
  Complex operator[](size_t i) const { return coords_[i]; }

 private:
  std::vector<Complex> coords_;
};

/// 0-based permutation of {0..n-1}: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm inverse_perm(const Perm& p);
Perm compose_perm(const Perm& outer, const Perm& inner);  // outer after inner

/// The configuration (z_1, ..., z_n) = (0, 1, infinity, lambda...), in that
/// index order.
PointConfig lambda_config(const LambdaVector& lambda);

/// The unique map sending (z_{sigma^-1(1)}, z_{sigma^-1(2)}, z_{sigma^-1(3)})
/// to (0, 1, infinity).
MobiusMap f_sigma(const LambdaVector& lambda, const Perm& sigma);

/// Coordinates of the relabeled configuration: component i is
/// f_sigma(z_{sigma^-1(i+3)}).
LambdaVector g_sigma(const LambdaVector& lambda, const Perm& sigma);

/// Coset representatives of the stabilizer-of-{1,2,3} subgroup, given by the
/// points they move into the first three slots.  Indices p, q, r are the
/// 1-based point labels in [4, n].
struct CosetRep {
  enum class Kind { E, S1, S2, S3, S12, S23, S31, S123 };
  Kind kind = Kind::E;
  int p = 0, q = 0, r = 0;
};

/// The six coordinate involutions permuting {0, 1, infinity}.
enum class HMap { Id, OneMinusL, InvL, LOverLMinus1, LMinus1OverL, InvOneMinusL };

Complex apply_h(HMap h, Complex lambda);

/// Closed-form evaluation of g_sigma for sigma = rep * v, where v permutes
/// {1,2,3} (as h) and the tail (as tau).  Independent oracle for g_sigma.
LambdaVector g_sigma_closed_form(const LambdaVector& lambda,
                                 const CosetRep& rep, HMap h = HMap::Id,
                                 const Perm& tau = {});

/// Permutations sigma with g_sigma(lambda) = lambda, one per stabilizer
/// element of the configuration (identity first, same order as the
/// stabilizer's element list).  Requires n >= 5.
std::vector<Perm> stabilizer_perms(const LambdaVector& lambda,
                                   double tol = kDefaultTol);

/// Central finite-difference Jacobian of g_sigma at lambda.  Both real and
/// imaginary steps are taken; their agreement (Cauchy-Riemann) is checked.
Eigen::MatrixXcd jacobian(const LambdaVector& lambda, const Perm& sigma,
                          double h = 1e-5);

/// Coordinates of a configuration after sending a well-conditioned triple
/// of its points to (0, 1, infinity).  Returns the lambda vector and the
/// permutation-free correspondence is by construction: point k of the
/// returned lambda_config is the image of some point of alpha.
LambdaVector lambda_from_config(const PointConfig& alpha,
                                double tol = kDefaultTol);

bool lambda_approx_equal(const LambdaVector& a, const LambdaVector& b,
                         double tol);

}  // namespace msym
