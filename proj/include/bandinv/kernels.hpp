#pragma once

// Data-parallel kernels. Each has a plain serial reference and an OpenMP
// version; the tests hold the two to agreement and bench/ compares speed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandinv/bandmat.hpp"
#include "bandinv/linalg.hpp"
#include "bandinv/reconstruct.hpp"

namespace bandinv::kernels {

/// Band products c_{k+j,k} = (sum_t v(k+j,t) y_t v(k,t) + sum_t v(k,t) y_t v(k+j,t)) / 2
/// for j = 0..n; out[j][k] with 0-based k.
std::vector<std::vector<double>> band_products_serial(const DenseMatrix& values, std::span<const double> nodes,
                                                      std::size_t n);
std::vector<std::vector<double>> band_products_omp(const DenseMatrix& values, std::span<const double> nodes,
                                                   std::size_t n);

/// max |sum_t v(l,t) y_t v(k,t)| over |l - k| > n.
double off_band_max_serial(const DenseMatrix& values, std::span<const double> nodes, std::size_t n);
double off_band_max_omp(const DenseMatrix& values, std::span<const double> nodes, std::size_t n);

/// values * values^t, the Gram matrix of the basis.
DenseMatrix gram_serial(const DenseMatrix& values);
DenseMatrix gram_omp(const DenseMatrix& values);

/// Independent round trips, one per matrix. Failures are reported through
/// `error` rather than thrown.
struct BatchItem {
  std::optional<RoundTrip> result;
  std::string error;
};
std::vector<BatchItem> roundtrip_batch_serial(std::span<const BandMatrix> batch, const ReconstructOptions& opts = {});
std::vector<BatchItem> roundtrip_batch_omp(std::span<const BandMatrix> batch, const ReconstructOptions& opts = {});

}  // namespace bandinv::kernels
