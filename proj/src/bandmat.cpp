#include "bandinv/bandmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bandinv/error.hpp"

namespace bandinv {

BandMatrix::BandMatrix(std::size_t n, std::vector<std::vector<double>> diags)
    : n_(n), dim_(diags.empty() ? 0 : diags[0].size()), diags_(std::move(diags)) {
  if (n_ == 0) throw Error(Errc::InvalidArgument, "half-bandwidth must be >= 1");
  if (diags_.size() != n_ + 1)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(n_ + 1) + " diagonals");
  if (dim_ == 0) throw Error(Errc::InvalidArgument, "empty main diagonal");
  for (std::size_t j = 0; j <= n_; ++j) {
    const std::size_t want = dim_ > j ? dim_ - j : 0;
    if (diags_[j].size() != want)
      throw Error(Errc::InvalidArgument, "diagonal " + std::to_string(j) + " must have length " + std::to_string(want));
  }
}

double BandMatrix::d_or_zero(std::size_t j, long k) const {
  if (j > n_ || k < 1 || static_cast<std::size_t>(k) > diags_[j].size()) return 0.0;
  return diags_[j][static_cast<std::size_t>(k) - 1];
}

double BandMatrix::at(std::size_t row, std::size_t col) const {
  const std::size_t lo = std::min(row, col);
  const std::size_t j = std::max(row, col) - lo;
  if (j > n_) return 0.0;
  return diags_[j][lo];
}

TriangularInit::TriangularInit(DenseMatrix t) : t_(std::move(t)) {
  const std::size_t n = t_.rows();
  if (n == 0 || t_.cols() != n) throw Error(Errc::InvalidArgument, "initial-condition matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (t_(i, j) != 0.0) throw Error(Errc::NotTriangular, "nonzero entry below the diagonal");
    if (t_(i, i) == 0.0) throw Error(Errc::NotTriangular, "zero on the diagonal at " + std::to_string(i + 1));
  }
}

TriangularInit TriangularInit::identity(std::size_t n) { return TriangularInit(DenseMatrix::identity(n)); }

DegenerationProfile validate_band(const BandMatrix& a) {
  const std::size_t n = a.half_bandwidth();
  const std::size_t big_n = a.dim();
  if (big_n <= n) throw Error(Errc::InvalidArgument, "class membership needs N > n");

  if (!(a.d(n, 1) > 0.0))
    throw Error(Errc::LeadingZero, "d^(" + std::to_string(n) + ")_1 must be positive (rule 1<m_1< N-n+1)");

  DegenerationProfile prof;
  prof.m.reserve(n);
  std::size_t prev = 0;  // m_j, with m_0 = 0
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t diag = n - j;
    const std::size_t last = big_n - n + j;  // last stored index of that diagonal
    std::size_t cut = 0;
    for (std::size_t k = prev + 1; k <= last; ++k) {
      const double v = a.d(diag, k);
      const std::string where = "d^(" + std::to_string(diag) + ")_" + std::to_string(k);
      if (v < 0.0) throw Error(Errc::NegativeConstrainedEntry, where + " is negative");
      if (cut == 0 && v == 0.0) cut = k;
      else if (cut != 0 && v > 0.0)
        throw Error(Errc::NonContiguousPositiveRun, where + " is positive after the zero at " + std::to_string(cut));
    }
    if (cut != 0) {
      if (diag == 1)
        throw Error(Errc::NonContiguousPositiveRun,
                    "d^(1) must stay positive on positions " + std::to_string(prev + 1) + ".." + std::to_string(last));
      if (j > 0 && cut == prev + 1) prof.empty_run = true;
      prof.m.push_back(cut);
      ++prof.j0;
      prev = cut;
    } else {
      prev = last + 1;
      prof.m.push_back(prev);
    }
  }
  return prof;
}

namespace {

std::size_t segment_of(const DegenerationProfile& prof, std::size_t k) {
  std::size_t s = 0;
  while (s < prof.m.size() && prof.m[s] < k) ++s;
  return s;
}

}  // namespace

PTable solve_recurrence(const BandMatrix& a, const TriangularInit& t, const DegenerationProfile& profile) {
  const std::size_t n = a.half_bandwidth();
  const std::size_t big_n = a.dim();
  if (t.dim() != n) throw Error(Errc::DimensionMismatch, "initial-condition matrix size differs from n");
  if (profile.m.size() != n) throw Error(Errc::DimensionMismatch, "profile has the wrong number of indices");

  // p[k] for 1-based k; slot 0 unused.
  std::vector<VecPoly> p(big_n + 1, VecPoly(n));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<ScalarPoly> comps(n);
    for (std::size_t j = 0; j < n; ++j) comps[j] = ScalarPoly{t(j, i - 1)};
    p[i] = VecPoly(std::move(comps));
  }

  std::vector<Term> terms;
  for (std::size_t k = 1; k <= big_n; ++k) {
    if (std::find(profile.m.begin(), profile.m.end(), k) != profile.m.end()) continue;
    const std::size_t s = segment_of(profile, k);
    const std::size_t target = k + n - s;
    const double pivot = a.d(n - s, k);
    if (!(pivot > 0.0))
      throw Error(Errc::ZeroPivot, "d^(" + std::to_string(n - s) + ")_" + std::to_string(k) + " is not positive");

    const VecPoly zp = shift_mul(p[k]);
    terms.clear();
    terms.push_back({1.0 / pivot, &zp});
    terms.push_back({-a.d(0, k) / pivot, &p[k]});
    for (std::size_t i = 0; i < n; ++i) {
      const long idx = static_cast<long>(k) - static_cast<long>(n) + static_cast<long>(i);
      if (idx >= 1) terms.push_back({-a.d(n - i, static_cast<std::size_t>(idx)) / pivot, &p[idx]});
    }
    for (std::size_t i = 1; i + s < n; ++i) terms.push_back({-a.d(i, k) / pivot, &p[k + i]});
    p[target] = linear_combine(terms);
  }

  PTable table;
  table.p.assign(p.begin() + 1, p.end());
  table.q.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t mi = profile.m[i - 1];
    const VecPoly zp = shift_mul(p[mi]);
    terms.clear();
    terms.push_back({1.0, &zp});
    terms.push_back({-a.d(0, mi), &p[mi]});
    for (std::size_t k = 0; k < n; ++k) {
      const long idx = static_cast<long>(mi) - static_cast<long>(n) + static_cast<long>(k);
      if (idx >= 1) terms.push_back({-a.d(n - k, static_cast<std::size_t>(idx)), &p[idx]});
    }
    for (std::size_t k = 1; k + i <= n && mi + k <= big_n; ++k) terms.push_back({-a.d(k, mi), &p[mi + k]});
    table.q.push_back(linear_combine(terms));
  }
  return table;
}

DenseMatrix q_matrix(const PTable& table, double z) {
  const std::size_t n = table.q.size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = table.q[i][j](z);
  return m;
}

int rank_defect(const PTable& table, double z, double tol) {
  const auto sv = singular_values(q_matrix(table, z));
  const int n = static_cast<int>(sv.size());
  // Reference scale: Q evaluated with all terms taken in absolute value. When
  // every entry cancels down to rounding noise, the largest singular value
  // is itself noise and would make a full defect invisible.
  double ref2 = 0.0;
  for (const VecPoly& q : table.q)
    for (const ScalarPoly& c : q.components()) {
      double acc = 0.0;
      for (std::size_t k = c.coeffs().size(); k-- > 0;) acc = acc * std::abs(z) + std::abs(c.coeffs()[k]);
      ref2 += acc * acc;
    }
  const double ref = std::max(sv.empty() ? 0.0 : sv.front(), std::sqrt(ref2));
  if (ref == 0.0) return n;
  int rank = 0;
  for (double s : sv)
    if (s > tol * ref) ++rank;
  return n - rank;
}

DenseMatrix to_dense(const BandMatrix& a) {
  const std::size_t big_n = a.dim();
  DenseMatrix m(big_n, big_n);
  for (std::size_t j = 0; j <= a.half_bandwidth(); ++j)
    for (std::size_t k = 1; k + j <= big_n; ++k) {
      m(k + j - 1, k - 1) = a.d(j, k);
      m(k - 1, k + j - 1) = a.d(j, k);
    }
  return m;
}

BandMatrix from_dense(const DenseMatrix& m, std::size_t n) {
  const std::size_t big_n = m.rows();
  if (m.cols() != big_n) throw Error(Errc::InvalidArgument, "from_dense needs a square matrix");
  std::vector<std::vector<double>> diags(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 1; k + j <= big_n; ++k) diags[j].push_back(m(k + j - 1, k - 1));
  return BandMatrix(n, std::move(diags));
}

BandMatrix shrink_bandwidth(const BandMatrix& a) {
  std::size_t n = a.half_bandwidth();
  const auto& diags = a.diagonals();
  while (n > 1 && std::all_of(diags[n].begin(), diags[n].end(), [](double v) { return v == 0.0; })) --n;
  return BandMatrix(n, std::vector<std::vector<double>>(diags.begin(), diags.begin() + static_cast<long>(n) + 1));
}

}  // namespace bandinv
