#include "bandinv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bandinv/error.hpp"

namespace bandinv {

SpectralFunction::SpectralFunction(std::size_t n, std::size_t big_n, std::vector<Jump> jumps)
    : n_(n), big_n_(big_n), jumps_(std::move(jumps)) {
  if (n_ == 0) throw Error(Errc::InvalidArgument, "spectral function needs n >= 1");
  if (jumps_.size() != big_n_)
    throw Error(Errc::InvalidArgument,
                "expected " + std::to_string(big_n_) + " jumps, got " + std::to_string(jumps_.size()));
  for (const auto& j : jumps_)
    if (j.alpha.size() != n_) throw Error(Errc::InvalidArgument, "jump vector length differs from n");
  std::stable_sort(jumps_.begin(), jumps_.end(), [](const Jump& a, const Jump& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.alpha < b.alpha;
  });
}

EigenDecomposition eig_symmetric(const DenseMatrix& m, double tol) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::NotSymmetric, "matrix is not square");
  const double norm = m.frobenius();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol * norm)
        throw Error(Errc::NotSymmetric, "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differ");

  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(n);
  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_mass() >= tol * norm && norm > 0.0) {
    if (++sweep > kMaxSweeps) throw Error(Errc::NoConvergence, "Jacobi sweeps exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          const double vp = v(r, p);
          const double vq = v(r, q);
          v(r, p) = c * vp - s * vq;
          v(r, q) = s * vp + c * vq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src);
    double len = 0.0;
    for (std::size_t r = 0; r < n; ++r) len += v(r, src) * v(r, src);
    len = std::sqrt(len);
    double big = 0.0;
    for (std::size_t r = 0; r < n; ++r) big = std::max(big, std::abs(v(r, src)));
    std::size_t lead = 0;
    while (std::abs(v(lead, src)) < big * (1.0 - 1e-12)) ++lead;
    const double sign = v(lead, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = sign * v(r, src) / len;
  }
  return out;
}

SpectralFunction spectral_function_identity(const BandMatrix& a) {
  const std::size_t n = a.half_bandwidth();
  const std::size_t big_n = a.dim();
  const EigenDecomposition eig = eig_symmetric(to_dense(a));
  std::vector<Jump> jumps;
  jumps.reserve(big_n);
  for (std::size_t k = 0; k < big_n; ++k) {
    Jump j{eig.values[k], std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) j.alpha[i] = eig.vectors(i, k);
    jumps.push_back(std::move(j));
  }
  SpectralFunction sigma(n, big_n, std::move(jumps));
  try {
    validate_sigma(sigma);
  } catch (const Error& e) {
    throw Error(Errc::MembershipViolation, e.what());
  }
  return sigma;
}

SpectralFunction transform_sigma(const SpectralFunction& sigma_identity, const TriangularInit& t) {
  const std::size_t n = sigma_identity.n();
  if (t.dim() != n) throw Error(Errc::DimensionMismatch, "initial-condition matrix size differs from n");
  std::vector<Jump> jumps;
  jumps.reserve(sigma_identity.dim());
  for (const Jump& src : sigma_identity.jumps()) {
    // Forward substitution with the lower triangular T^t.
    Jump out{src.x, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      double acc = src.alpha[i];
      for (std::size_t k = 0; k < i; ++k) acc -= t(k, i) * out.alpha[k];
      out.alpha[i] = acc / t(i, i);
    }
    jumps.push_back(std::move(out));
  }
  return SpectralFunction(n, sigma_identity.dim(), std::move(jumps));
}

std::vector<MergedJump> merged_jumps(const SpectralFunction& sigma, double rel_tol) {
  const std::size_t n = sigma.n();
  std::vector<MergedJump> out;
  for (const Jump& j : sigma.jumps()) {
    if (out.empty() || std::abs(j.x - out.back().x) > rel_tol * (1.0 + std::abs(out.back().x)))
      out.push_back({j.x, DenseMatrix(n, n), 0});
    MergedJump& m = out.back();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.weight(r, c) += j.alpha[r] * j.alpha[c];
    ++m.count;
  }
  return out;
}

DenseMatrix total_mass(const SpectralFunction& sigma) {
  const std::size_t n = sigma.n();
  DenseMatrix m(n, n);
  for (const Jump& j : sigma.jumps())
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) += j.alpha[r] * j.alpha[c];
  return m;
}

void validate_sigma(const SpectralFunction& sigma, double tol) {
  const std::size_t n = sigma.n();
  std::vector<bool> alive(n, false);
  for (std::size_t k = 0; k < sigma.jumps().size(); ++k) {
    const auto& alpha = sigma.jumps()[k].alpha;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j)
      if (alpha[j] != 0.0) {
        any = true;
        alive[j] = true;
      }
    if (!any) throw Error(Errc::ZeroJump, "jump " + std::to_string(k + 1) + " has a zero vector");
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!alive[j]) throw Error(Errc::DeadComponent, "component " + std::to_string(j + 1) + " vanishes at every node");

  std::size_t rank_sum = 0;
  for (const MergedJump& m : merged_jumps(sigma)) {
    const auto eig = eig_symmetric(m.weight);
    const double top = eig.values.back();
    for (double lambda : eig.values)
      if (lambda > tol * top) ++rank_sum;
  }
  if (rank_sum != sigma.dim())
    throw Error(Errc::RankSumMismatch,
                "jump ranks sum to " + std::to_string(rank_sum) + ", expected " + std::to_string(sigma.dim()));
}

double inner(const SpectralFunction& sigma, const VecPoly& r, const VecPoly& s) {
  const std::size_t n = sigma.n();
  if (r.dim() != n || s.dim() != n) throw Error(Errc::DimensionMismatch, "polynomial dimension differs from n");
  double acc = 0.0;
  for (const Jump& j : sigma.jumps()) {
    double pr = 0.0, ps = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pr += j.alpha[i] * r[i](j.x);
      ps += j.alpha[i] * s[i](j.x);
    }
    acc += pr * ps;
  }
  return acc;
}

}  // namespace bandinv
