#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bandinv/bandmat.hpp"
#include "bandinv/linalg.hpp"
#include "bandinv/spectral.hpp"
#include "bandinv/vecpoly.hpp"

namespace bandinv {

/// Result of orthonormalizing the monomial vector sequence e_1, e_2, ... in
/// L2(R, sigma).
///
/// Polynomials are expressed in the original variable z. Internally the nodes
/// are mapped to [-1, 1] by y = (z - shift) / scale; `values` holds the
/// basis evaluated against every jump, values(i, t) = alpha_t . p_i(x_t), which
/// is all the inner product ever sees and is independent of that mapping.
struct GSOutput {
  std::vector<VecPoly> pbasis;
  std::vector<VecPoly> generators;
  std::vector<long> pheights;
  std::vector<long> qheights;
  /// For generator j, the 1-based k with h(z p_k) = h(q_j), or 0 when the
  /// generator appeared below height n.
  std::vector<std::size_t> anchors;
  /// Heights processed, i.e. how many e_i were consumed.
  std::size_t iterations = 0;
  /// Zero-norm events attributed to already known generator residues.
  std::size_t discarded = 0;

  DenseMatrix values;            // N x N
  DenseMatrix generator_values;  // n x N, numerically ~0
  double shift = 0.0;
  double scale = 1.0;

  /// N n + n(n-1)/2, the value the generator heights must sum to.
  long expected_height_sum() const;
  long height_sum() const;
};

struct ReconstructOptions {
  double tol_zero = 1e-8;
  /// Entries that must vanish are snapped to zero when below
  /// band_tol * max(1, scale); larger ones raise an error.
  double band_tol = 1e-9;
  /// Check every |l - k| > n entry instead of the first off-band diagonal.
  bool verify_band = false;
};

struct Reconstruction {
  BandMatrix matrix;
  DegenerationProfile profile;
  TriangularInit tinit;
  GSOutput diagnostics;
};

/// Throws IterationCapExceeded or AmbiguousNorm.
GSOutput gram_schmidt(const SpectralFunction& sigma, double tol_zero = 1e-8);

/// Degeneration profile read off the generator heights, m_j = anchor of q_j.
/// Throws ProfileMismatch if a generator has no anchor.
DegenerationProfile profile_from_heights(const GSOutput& gs);

/// c_lk = <p_l, z p_k> on the band. Throws BandViolation.
BandMatrix matrix_from_basis(const SpectralFunction& sigma, const GSOutput& gs, const ReconstructOptions& opts = {});

/// Largest |c_lk| over |l - k| > n, computed from all N^2 products.
double off_band_max(const SpectralFunction& sigma, const GSOutput& gs, std::size_t n);

/// t_ij = component i of the constant vector p_j. Throws NotTriangular.
TriangularInit initial_conditions(const GSOutput& gs);

/// Full inverse map. Throws the union of the component errors plus
/// ProfileMismatch.
Reconstruction reconstruct(const SpectralFunction& sigma, const ReconstructOptions& opts = {});

struct RoundTrip {
  double matrix_deviation = 0.0;
  double tinit_deviation = 0.0;
  /// n = 1 only: deviation between this pipeline and the scalar
  /// three-term-recurrence reconstruction.
  std::optional<double> scalar_deviation;
  Reconstruction reconstruction;
};

/// direct followed by inverse. A nonzero `perturb` shifts the first node of
/// the intermediate spectral function by that amount.
RoundTrip roundtrip(const BandMatrix& a, const ReconstructOptions& opts = {}, double perturb = 0.0);

/// Largest entrywise difference; matrices of different shape compare as +inf.
double max_deviation(const BandMatrix& a, const BandMatrix& b);

}  // namespace bandinv
