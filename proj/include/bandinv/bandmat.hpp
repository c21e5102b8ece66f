#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bandinv/linalg.hpp"
#include "bandinv/vecpoly.hpp"

namespace bandinv {

/// Symmetric band matrix stored as its n+1 lower diagonals.
///
/// Diagonal j (0 = main) holds d^(j)_1 .. d^(j)_{N-j}; entry d^(j)_k sits at
/// the 1-based positions (k+j, k) and (k, k+j). Only one triangle is stored,
/// so the represented matrix is symmetric by construction.
class BandMatrix {
 public:
  /// diags[j] must have length max(N - j, 0) where N = diags[0].size().
  BandMatrix(std::size_t n, std::vector<std::vector<double>> diags);

  std::size_t half_bandwidth() const { return n_; }
  std::size_t dim() const { return dim_; }

  /// d^(j)_k with 1-based k in [1, N - j].
  double d(std::size_t j, std::size_t k) const { return diags_[j][k - 1]; }
  /// d^(j)_k, or 0 when (j, k) falls outside the stored band.
  double d_or_zero(std::size_t j, long k) const;

  std::span<const double> diagonal(std::size_t j) const { return diags_[j]; }
  const std::vector<std::vector<double>>& diagonals() const { return diags_; }

  /// 0-based dense access; zero outside the band.
  double at(std::size_t row, std::size_t col) const;

  friend bool operator==(const BandMatrix&, const BandMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t dim_;
  std::vector<std::vector<double>> diags_;
};

/// Degeneration indices m_1 < ... < m_n (1-based positions) and the number j0
/// of diagonals that genuinely degenerate.
struct DegenerationProfile {
  std::vector<std::size_t> m;
  std::size_t j0 = 0;
  /// Set when some m_{j+1} = m_j + 1, i.e. a constrained diagonal has an
  /// empty positive run. Accepted, but flagged.
  bool empty_run = false;

  friend bool operator==(const DegenerationProfile& a, const DegenerationProfile& b) {
    return a.m == b.m && a.j0 == b.j0;
  }
};

/// Upper triangular n x n matrix of initial values with nonzero diagonal.
class TriangularInit {
 public:
  /// Full row-major n x n; entries below the diagonal must be zero.
  explicit TriangularInit(DenseMatrix t);
  static TriangularInit identity(std::size_t n);

  std::size_t dim() const { return t_.rows(); }
  /// 0-based (i, j); zero below the diagonal.
  double operator()(std::size_t i, std::size_t j) const { return t_(i, j); }
  const DenseMatrix& matrix() const { return t_; }

 private:
  DenseMatrix t_;
};

/// Vector polynomials p_1..p_N and q_1..q_n built from the recurrence.
struct PTable {
  std::vector<VecPoly> p;
  std::vector<VecPoly> q;
};

/// Infers the degeneration profile and checks class membership.
/// Throws LeadingZero, NonContiguousPositiveRun, NegativeConstrainedEntry.
DegenerationProfile validate_band(const BandMatrix& a);

/// Solutions of (A - z) phi = 0 on the non-degenerate rows with initial values
/// <delta_i, phi^(j)> = t_ji. Throws ZeroPivot.
PTable solve_recurrence(const BandMatrix& a, const TriangularInit& t, const DegenerationProfile& profile);

/// Entry (i, j) is Q_i^(j)(z), i.e. component j of q_i.
DenseMatrix q_matrix(const PTable& table, double z);

/// n - numerical rank of q_matrix(table, z). Singular values count when above
/// tol * max(largest singular value, ||Q||_F evaluated with |coefficients| at |z|).
int rank_defect(const PTable& table, double z, double tol = 1e-9);

DenseMatrix to_dense(const BandMatrix& a);

/// Builds a BandMatrix with half-bandwidth n from a dense symmetric matrix,
/// reading the lower triangle.
BandMatrix from_dense(const DenseMatrix& m, std::size_t n);

/// Drops outer diagonals that are identically zero (keeps n >= 1).
BandMatrix shrink_bandwidth(const BandMatrix& a);

}  // namespace bandinv
