#pragma once

#include <cstddef>
#include <vector>

#include "bandinv/bandmat.hpp"
#include "bandinv/linalg.hpp"
#include "bandinv/vecpoly.hpp"

namespace bandinv {

/// One rank-one jump sigma_k = alpha alpha^t located at node x.
struct Jump {
  double x;
  std::vector<double> alpha;

  friend bool operator==(const Jump&, const Jump&) = default;
};

/// Matrix-valued step function sigma(t) = sum_{x_k < t} alpha_k alpha_k^t.
///
/// Jumps are kept sorted by node, ties broken by lexicographic alpha, so two
/// functions with the same jump multiset compare equal.
class SpectralFunction {
 public:
  /// Throws InvalidArgument unless there are exactly N jumps, each with n
  /// components.
  SpectralFunction(std::size_t n, std::size_t big_n, std::vector<Jump> jumps);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return big_n_; }
  const std::vector<Jump>& jumps() const { return jumps_; }

  friend bool operator==(const SpectralFunction&, const SpectralFunction&) = default;

 private:
  std::size_t n_;
  std::size_t big_n_;
  std::vector<Jump> jumps_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending, with multiplicity
  DenseMatrix vectors;         // column k pairs with values[k]
};

/// Jumps merged at numerically equal nodes.
struct MergedJump {
  double x;
  DenseMatrix weight;  // n x n, sum of alpha alpha^t
  std::size_t count;
};

/// Cyclic Jacobi diagonalization. Stops once the off-diagonal Frobenius mass
/// drops below tol * ||M||_F. Eigenvectors are unit length with their
/// largest-magnitude entry (lowest index on ties) positive.
/// Throws NotSymmetric, NoConvergence (after 100 sweeps).
EigenDecomposition eig_symmetric(const DenseMatrix& m, double tol = 1e-14);

/// sigma^I of A: node lambda_k, alpha = first n entries of eigenvector k.
/// Throws MembershipViolation if the result fails validate_sigma.
SpectralFunction spectral_function_identity(const BandMatrix& a);

/// sigma^T from sigma^I: alpha' = (T^t)^{-1} alpha per jump.
SpectralFunction transform_sigma(const SpectralFunction& sigma_identity, const TriangularInit& t);

/// Throws ZeroJump, DeadComponent or RankSumMismatch.
void validate_sigma(const SpectralFunction& sigma, double tol = 1e-9);

/// Groups jumps whose nodes agree to rel_tol * (1 + |x|).
std::vector<MergedJump> merged_jumps(const SpectralFunction& sigma, double rel_tol = 1e-10);

/// Total mass sum_k alpha_k alpha_k^t.
DenseMatrix total_mass(const SpectralFunction& sigma);

/// L2(R, sigma) inner product sum_k (alpha_k . r(x_k)) (alpha_k . s(x_k)).
/// Throws DimensionMismatch.
double inner(const SpectralFunction& sigma, const VecPoly& r, const VecPoly& s);

}  // namespace bandinv
