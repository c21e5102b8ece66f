#include "bandinv/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bandinv/error.hpp"
#include "bandinv/kernels.hpp"
#include "bandinv/scalar.hpp"

namespace bandinv {

long GSOutput::expected_height_sum() const {
  const long n = static_cast<long>(generators.empty() ? 0 : generators.front().dim());
  const long big_n = static_cast<long>(pbasis.size());
  return big_n * n + n * (n - 1) / 2;
}

long GSOutput::height_sum() const {
  long s = 0;
  for (long h : qheights) s += h;
  return s;
}

namespace {

struct Slot {
  bool basis;         // true: pbasis[index]; false: zero class
  std::size_t index;  // generator index when !basis
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> scaled_nodes(const SpectralFunction& sigma, double shift, double scale) {
  std::vector<double> y;
  y.reserve(sigma.dim());
  for (const Jump& j : sigma.jumps()) y.push_back((j.x - shift) / scale);
  return y;
}

}  // namespace

GSOutput gram_schmidt(const SpectralFunction& sigma, double tol_zero) {
  const std::size_t n = sigma.n();
  const std::size_t big_n = sigma.dim();
  const auto& jumps = sigma.jumps();

  GSOutput out;
  double lo = jumps.front().x, hi = jumps.front().x;
  for (const Jump& j : jumps) {
    lo = std::min(lo, j.x);
    hi = std::max(hi, j.x);
  }
  out.shift = 0.5 * (lo + hi);
  out.scale = 0.5 * (hi - lo);
  if (!(out.scale > 0.0)) out.scale = 1.0;
  const std::vector<double> y = scaled_nodes(sigma, out.shift, out.scale);

  // Work in the scaled variable throughout; the substitution back to z is
  // applied once at the end.
  std::vector<VecPoly> basis;
  std::vector<std::vector<double>> vals;
  std::vector<VecPoly> gens;
  std::vector<std::vector<double>> gen_vals;
  std::vector<bool> residue_known(n, false);
  std::vector<Slot> slots;

  const std::size_t cap = n * (big_n - n + 1) + 1;
  for (std::size_t h = 0;; ++h) {
    if (basis.size() == big_n && gens.size() == n) break;
    if (h + 1 > cap)
      throw Error(Errc::IterationCapExceeded, "no termination after " + std::to_string(cap) + " candidates (" +
                                                  std::to_string(basis.size()) + " basis vectors, " +
                                                  std::to_string(gens.size()) + " generators)");
    out.iterations = h + 1;

    // Candidate of height h: e_{h+1} at the start, afterwards y times the
    // basis vector sitting n heights below. That spans the same flag of
    // subspaces as the monomials but stays well conditioned.
    VecPoly cand(n);
    std::vector<double> cv(big_n);
    std::size_t anchor = 0;
    if (h < n) {
      cand = basis_e(h + 1, n);
      for (std::size_t t = 0; t < big_n; ++t) cv[t] = jumps[t].alpha[h];
    } else {
      const Slot below = slots[h - n];
      if (!below.basis) {
        // z times a zero-class element stays in the zero class.
        slots.push_back(below);
        continue;
      }
      cand = shift_mul(basis[below.index]);
      for (std::size_t t = 0; t < big_n; ++t) cv[t] = y[t] * vals[below.index][t];
      anchor = below.index + 1;
    }

    const double cand_norm = std::sqrt(dot(cv, cv));
    std::vector<double> coef(basis.size(), 0.0);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const double c = dot(vals[i], cv);
        for (std::size_t t = 0; t < big_n; ++t) cv[t] -= c * vals[i][t];
        coef[i] += c;
      }
    const double norm = std::sqrt(dot(cv, cv));
    const double tau = tol_zero * std::sqrt(cand_norm * cand_norm + 1.0);
    if (norm > tau / 10.0 && norm < tau * 10.0)
      throw Error(Errc::AmbiguousNorm, "residual norm " + std::to_string(norm) + " at height " + std::to_string(h) +
                                           " is within a factor 10 of the threshold " + std::to_string(tau));

    std::vector<Term> terms;
    terms.reserve(basis.size() + 1);
    terms.push_back({1.0, &cand});
    for (std::size_t i = 0; i < basis.size(); ++i) terms.push_back({-coef[i], &basis[i]});
    VecPoly resid = linear_combine(terms);

    if (norm > tau) {
      if (basis.size() == big_n)
        throw Error(Errc::IterationCapExceeded, "more than N independent vectors at height " + std::to_string(h));
      for (double& v : cv) v /= norm;
      slots.push_back({true, basis.size()});
      basis.push_back(scaled(resid, 1.0 / norm));
      vals.push_back(std::move(cv));
      out.pheights.push_back(static_cast<long>(h));
      continue;
    }

    const std::size_t r = h % n;
    if (residue_known[r]) {
      ++out.discarded;
      slots.push_back({false, 0});
      continue;
    }
    residue_known[r] = true;
    VecPoly g = trimmed(resid, 1e-12);
    if (height(g) != height(resid)) g = resid;
    slots.push_back({false, gens.size()});
    gens.push_back(std::move(g));
    gen_vals.push_back(std::move(cv));
    out.qheights.push_back(static_cast<long>(h));
    out.anchors.push_back(anchor);
  }

  out.pbasis.reserve(big_n);
  for (const VecPoly& p : basis) out.pbasis.push_back(affine_substitute(p, out.shift, out.scale));
  out.generators.reserve(n);
  for (const VecPoly& g : gens) out.generators.push_back(affine_substitute(g, out.shift, out.scale));
  out.values = DenseMatrix(big_n, big_n);
  for (std::size_t i = 0; i < big_n; ++i)
    for (std::size_t t = 0; t < big_n; ++t) out.values(i, t) = vals[i][t];
  out.generator_values = DenseMatrix(n, big_n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < big_n; ++t) out.generator_values(i, t) = gen_vals[i][t];
  return out;
}

DegenerationProfile profile_from_heights(const GSOutput& gs) {
  const std::size_t n = gs.generators.size();
  const std::size_t big_n = gs.pbasis.size();
  DegenerationProfile prof;
  std::size_t prev = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t m = gs.anchors[j];
    if (m == 0)
      throw Error(Errc::ProfileMismatch, "generator " + std::to_string(j + 1) + " has height below n");
    if (m <= prev) throw Error(Errc::ProfileMismatch, "generator anchors are not increasing");
    const std::size_t full = big_n - n + j + 1;  // m_{j+1} without degeneration
    if (m > full) throw Error(Errc::ProfileMismatch, "anchor " + std::to_string(m) + " exceeds " + std::to_string(full));
    if (m < full) {
      ++prof.j0;
      if (j > 0 && m == prev + 1) prof.empty_run = true;
    }
    prof.m.push_back(m);
    prev = m;
  }
  return prof;
}

BandMatrix matrix_from_basis(const SpectralFunction& sigma, const GSOutput& gs, const ReconstructOptions& opts) {
  const std::size_t n = sigma.n();
  const std::size_t big_n = sigma.dim();
  const std::vector<double> y = scaled_nodes(sigma, gs.shift, gs.scale);
  const double snap = opts.band_tol * std::max(1.0, gs.scale);

  auto diags = kernels::band_products_omp(gs.values, y, n);
  for (std::size_t j = 0; j <= n; ++j)
    for (double& c : diags[j]) c *= gs.scale;
  for (double& c : diags[0]) c += gs.shift;

  const DegenerationProfile prof = profile_from_heights(gs);
  for (std::size_t j = 0; j < n; ++j) {
    // d^(n-j) must vanish on positions m_{j+1} .. N-n+j.
    const std::size_t diag = n - j;
    for (std::size_t k = prof.m[j]; k + diag <= big_n; ++k) {
      double& c = diags[diag][k - 1];
      if (std::abs(c) <= snap) c = 0.0;
    }
  }

  // Sampled check: the first diagonal outside the band.
  if (big_n > n + 1) {
    for (std::size_t k = 0; k + n + 1 < big_n; ++k) {
      double c = 0.0;
      for (std::size_t t = 0; t < big_n; ++t) c += gs.values(k + n + 1, t) * y[t] * gs.values(k, t);
      if (std::abs(c * gs.scale) > snap)
        throw Error(Errc::BandViolation, "entry (" + std::to_string(k + n + 2) + "," + std::to_string(k + 1) +
                                             ") is " + std::to_string(c * gs.scale));
    }
  }
  if (opts.verify_band) {
    const double worst = off_band_max(sigma, gs, n);
    if (worst > snap) throw Error(Errc::BandViolation, "off-band entry of size " + std::to_string(worst));
  }
  return BandMatrix(n, std::move(diags));
}

double off_band_max(const SpectralFunction& sigma, const GSOutput& gs, std::size_t n) {
  const std::vector<double> y = scaled_nodes(sigma, gs.shift, gs.scale);
  return gs.scale * kernels::off_band_max_omp(gs.values, y, n);
}

TriangularInit initial_conditions(const GSOutput& gs) {
  const std::size_t n = gs.pbasis.empty() ? 0 : gs.pbasis.front().dim();
  if (gs.pbasis.size() < n) throw Error(Errc::NotTriangular, "fewer than n basis vectors");
  DenseMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const VecPoly& p = gs.pbasis[j];
    const ExtendedInt deg = p.max_degree();
    if (!deg.is_neg_inf() && deg.value() > 0)
      throw Error(Errc::NotTriangular, "basis vector " + std::to_string(j + 1) + " is not constant");
    for (std::size_t i = 0; i < n; ++i) t(i, j) = p[i].coeff(0);
  }
  return TriangularInit(std::move(t));
}

Reconstruction reconstruct(const SpectralFunction& sigma, const ReconstructOptions& opts) {
  validate_sigma(sigma);
  GSOutput gs = gram_schmidt(sigma, opts.tol_zero);
  if (gs.height_sum() != gs.expected_height_sum())
    throw Error(Errc::ProfileMismatch, "generator heights sum to " + std::to_string(gs.height_sum()) + ", expected " +
                                           std::to_string(gs.expected_height_sum()));
  BandMatrix a = matrix_from_basis(sigma, gs, opts);
  TriangularInit t = initial_conditions(gs);
  const DegenerationProfile from_heights = profile_from_heights(gs);
  DegenerationProfile from_zeros;
  try {
    from_zeros = validate_band(a);
  } catch (const Error& e) {
    throw Error(Errc::ProfileMismatch, std::string("reconstructed matrix rejected: ") + e.what());
  }
  if (!(from_zeros == from_heights))
    throw Error(Errc::ProfileMismatch, "zero pattern and generator heights disagree");
  return Reconstruction{std::move(a), from_zeros, std::move(t), std::move(gs)};
}

double max_deviation(const BandMatrix& a, const BandMatrix& b) {
  if (a.dim() != b.dim() || a.half_bandwidth() != b.half_bandwidth()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t j = 0; j <= a.half_bandwidth(); ++j)
    for (std::size_t k = 0; k < a.diagonal(j).size(); ++k)
      worst = std::max(worst, std::abs(a.diagonal(j)[k] - b.diagonal(j)[k]));
  return worst;
}

RoundTrip roundtrip(const BandMatrix& a, const ReconstructOptions& opts, double perturb) {
  SpectralFunction sigma = spectral_function_identity(a);
  if (perturb != 0.0) {
    std::vector<Jump> jumps = sigma.jumps();
    jumps.front().x += perturb;
    sigma = SpectralFunction(sigma.n(), sigma.dim(), std::move(jumps));
  }
  RoundTrip rt{0.0, 0.0, std::nullopt, reconstruct(sigma, opts)};
  rt.matrix_deviation = max_deviation(a, rt.reconstruction.matrix);
  rt.tinit_deviation = (rt.reconstruction.tinit.matrix() - DenseMatrix::identity(a.half_bandwidth())).max_abs();
  if (a.half_bandwidth() == 1) {
    const BandMatrix oracle = scalar::jacobi_from_spectrum(sigma);
    rt.scalar_deviation = max_deviation(oracle, rt.reconstruction.matrix);
  }
  return rt;
}

}  // namespace bandinv
