#include "bandinv/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "bandinv/spectral.hpp"

namespace bandinv::kernels {

namespace {

// Below this many multiply-adds a parallel region costs more than it saves.
constexpr std::size_t kParallelWork = 1 << 14;

double weighted(const DenseMatrix& v, std::span<const double> y, std::size_t l, std::size_t k) {
  double s = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) s += v(l, t) * y[t] * v(k, t);
  return s;
}

std::vector<std::vector<double>> band_shape(std::size_t big_n, std::size_t n) {
  std::vector<std::vector<double>> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) out[j].assign(big_n > j ? big_n - j : 0, 0.0);
  return out;
}

}  // namespace

std::vector<std::vector<double>> band_products_serial(const DenseMatrix& values, std::span<const double> nodes,
                                                      std::size_t n) {
  const std::size_t big_n = values.rows();
  auto out = band_shape(big_n, n);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k + j < big_n; ++k)
      out[j][k] = 0.5 * (weighted(values, nodes, k + j, k) + weighted(values, nodes, k, k + j));
  return out;
}

std::vector<std::vector<double>> band_products_omp(const DenseMatrix& values, std::span<const double> nodes,
                                                   std::size_t n) {
  const std::size_t big_n = values.rows();
  auto out = band_shape(big_n, n);
  const long rows = static_cast<long>(big_n);
  const bool par = big_n * (n + 1) * nodes.size() >= kParallelWork;
#pragma omp parallel for schedule(static) if (par)
  for (long kk = 0; kk < rows; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    for (std::size_t j = 0; j <= n && k + j < big_n; ++j)
      out[j][k] = 0.5 * (weighted(values, nodes, k + j, k) + weighted(values, nodes, k, k + j));
  }
  return out;
}

double off_band_max_serial(const DenseMatrix& values, std::span<const double> nodes, std::size_t n) {
  const std::size_t big_n = values.rows();
  double worst = 0.0;
  for (std::size_t l = 0; l < big_n; ++l)
    for (std::size_t k = 0; k + n + 1 <= l; ++k) worst = std::max(worst, std::abs(weighted(values, nodes, l, k)));
  return worst;
}

double off_band_max_omp(const DenseMatrix& values, std::span<const double> nodes, std::size_t n) {
  const std::size_t big_n = values.rows();
  const long rows = static_cast<long>(big_n);
  const bool par = big_n * big_n * nodes.size() / 2 >= kParallelWork;
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst) if (par)
  for (long ll = 0; ll < rows; ++ll) {
    const auto l = static_cast<std::size_t>(ll);
    for (std::size_t k = 0; k + n + 1 <= l; ++k) worst = std::max(worst, std::abs(weighted(values, nodes, l, k)));
  }
  return worst;
}

DenseMatrix gram_serial(const DenseMatrix& values) {
  const std::size_t r = values.rows(), c = values.cols();
  DenseMatrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < c; ++t) s += values(i, t) * values(j, t);
      g(i, j) = s;
    }
  return g;
}

DenseMatrix gram_omp(const DenseMatrix& values) {
  const std::size_t r = values.rows(), c = values.cols();
  DenseMatrix g(r, r);
  const long rows = static_cast<long>(r);
  const bool par = r * r * c >= kParallelWork;
#pragma omp parallel for schedule(static) if (par)
  for (long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < r; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < c; ++t) s += values(i, t) * values(j, t);
      g(i, j) = s;
    }
  }
  return g;
}

namespace {

BatchItem one_roundtrip(const BandMatrix& a, const ReconstructOptions& opts) {
  BatchItem item;
  try {
    item.result = roundtrip(a, opts);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

}  // namespace

std::vector<BatchItem> roundtrip_batch_serial(std::span<const BandMatrix> batch, const ReconstructOptions& opts) {
  std::vector<BatchItem> out;
  out.reserve(batch.size());
  for (const BandMatrix& a : batch) out.push_back(one_roundtrip(a, opts));
  return out;
}

std::vector<BatchItem> roundtrip_batch_omp(std::span<const BandMatrix> batch, const ReconstructOptions& opts) {
  std::vector<BatchItem> out(batch.size());
  const long count = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = one_roundtrip(batch[static_cast<std::size_t>(i)], opts);
  return out;
}

}  // namespace bandinv::kernels
