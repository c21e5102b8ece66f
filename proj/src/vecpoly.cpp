#include "bandinv/vecpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "bandinv/error.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv {

long ExtendedInt::value() const {
  if (!finite_) throw Error(Errc::InvalidArgument, "value() of NEG_INF");
  return value_;
}

std::string ExtendedInt::str() const { return finite_ ? std::to_string(value_) : "-inf"; }

// ---------------------------------------------------------------------------
// ScalarPoly

ScalarPoly::ScalarPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

ScalarPoly ScalarPoly::monomial(std::size_t degree, double coeff) {
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = coeff;
  return ScalarPoly(std::move(c));
}

void ScalarPoly::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

ExtendedInt ScalarPoly::degree() const {
  return c_.empty() ? NEG_INF : ExtendedInt(static_cast<long>(c_.size()) - 1);
}

double ScalarPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ScalarPoly ScalarPoly::times_z() const {
  if (c_.empty()) return {};
  std::vector<double> c(c_.size() + 1, 0.0);
  std::copy(c_.begin(), c_.end(), c.begin() + 1);
  return ScalarPoly(std::move(c));
}

ScalarPoly ScalarPoly::scaled(double factor) const {
  std::vector<double> c = c_;
  for (double& v : c) v *= factor;
  return ScalarPoly(std::move(c));
}

ScalarPoly ScalarPoly::trimmed(double rel) const {
  double big = 0.0;
  for (double v : c_) big = std::max(big, std::abs(v));
  std::vector<double> c = c_;
  for (double& v : c)
    if (std::abs(v) <= rel * big) v = 0.0;
  return ScalarPoly(std::move(c));
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return ScalarPoly(std::move(c));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return ScalarPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// VecPoly

VecPoly::VecPoly(std::size_t n) : comps_(n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "vector polynomial needs n >= 1");
}

VecPoly::VecPoly(std::vector<ScalarPoly> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw Error(Errc::InvalidArgument, "vector polynomial needs n >= 1");
}

bool VecPoly::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const ScalarPoly& p) { return p.is_zero(); });
}

ExtendedInt VecPoly::max_degree() const {
  ExtendedInt d = NEG_INF;
  for (const auto& p : comps_) d = std::max(d, p.degree());
  return d;
}

double VecPoly::coeff_norm2() const {
  double s = 0.0;
  for (const auto& p : comps_)
    for (double v : p.coeffs()) s += v * v;
  return s;
}

ExtendedInt height(const VecPoly& p) {
  const long n = static_cast<long>(p.dim());
  ExtendedInt h = NEG_INF;
  for (long j = 0; j < n; ++j) {
    const ExtendedInt d = p[static_cast<std::size_t>(j)].degree();
    if (!d.is_neg_inf()) h = std::max(h, ExtendedInt(n * d.value() + j));
  }
  return h;
}

VecPoly basis_e(std::size_t i, std::size_t n) {
  if (i == 0 || n == 0) throw Error(Errc::InvalidArgument, "basis_e needs i >= 1 and n >= 1");
  std::vector<ScalarPoly> comps(n);
  comps[(i - 1) % n] = ScalarPoly::monomial((i - 1) / n);
  return VecPoly(std::move(comps));
}

std::vector<double> eval(const VecPoly& p, double x) {
  std::vector<double> out(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) out[j] = p[j](x);
  return out;
}

VecPoly shift_mul(const VecPoly& p) {
  std::vector<ScalarPoly> comps;
  comps.reserve(p.dim());
  for (const auto& c : p.components()) comps.push_back(c.times_z());
  return VecPoly(std::move(comps));
}

VecPoly linear_combine(std::span<const Term> terms) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "linear_combine of an empty list");
  const std::size_t n = terms.front().poly->dim();
  std::vector<std::vector<double>> acc(n);
  for (const Term& t : terms) {
    if (t.poly->dim() != n) throw Error(Errc::MixedDimension, "terms have different n");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = (*t.poly)[j].coeffs();
      if (acc[j].size() < c.size()) acc[j].resize(c.size(), 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) acc[j][k] += t.coeff * c[k];
    }
  }
  std::vector<ScalarPoly> comps;
  comps.reserve(n);
  for (auto& c : acc) comps.emplace_back(std::move(c));
  return VecPoly(std::move(comps));
}

VecPoly linear_combine(std::initializer_list<Term> terms) {
  return linear_combine(std::span<const Term>(terms.begin(), terms.size()));
}

VecPoly scaled(const VecPoly& p, double factor) {
  std::vector<ScalarPoly> comps;
  comps.reserve(p.dim());
  for (const auto& c : p.components()) comps.push_back(c.scaled(factor));
  return VecPoly(std::move(comps));
}

VecPoly trimmed(const VecPoly& p, double rel) {
  double big = 0.0;
  for (const auto& c : p.components())
    for (double v : c.coeffs()) big = std::max(big, std::abs(v));
  std::vector<ScalarPoly> comps;
  comps.reserve(p.dim());
  for (const auto& c : p.components()) {
    std::vector<double> k = c.coeffs();
    for (double& v : k)
      if (std::abs(v) <= rel * big) v = 0.0;
    comps.emplace_back(std::move(k));
  }
  return VecPoly(std::move(comps));
}

namespace {

ScalarPoly substitute(const ScalarPoly& p, double shift, double scale) {
  // Horner in the polynomial ring with u(z) = (z - shift) / scale.
  const ScalarPoly u{-shift / scale, 1.0 / scale};
  std::vector<double> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    std::vector<double> next(acc.size() + 1, 0.0);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * u.coeff(0);
      next[k + 1] += acc[k] * u.coeff(1);
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return ScalarPoly(std::move(acc));
}

}  // namespace

VecPoly affine_substitute(const VecPoly& p, double shift, double scale) {
  std::vector<ScalarPoly> comps;
  comps.reserve(p.dim());
  for (const auto& c : p.components()) comps.push_back(substitute(c, shift, scale));
  return VecPoly(std::move(comps));
}

bool is_interpolation_solution(const VecPoly& p, const SpectralFunction& sigma, double tol) {
  if (p.dim() != sigma.n()) throw Error(Errc::DimensionMismatch, "polynomial and spectral function differ in n");
  double xmax = 0.0;
  for (const auto& jump : sigma.jumps()) xmax = std::max(xmax, std::abs(jump.x));
  const ExtendedInt deg = p.max_degree();
  const double d = deg.is_neg_inf() ? 0.0 : static_cast<double>(deg.value());
  const double scale = std::pow(1.0 + xmax, 2.0 * d) * p.coeff_norm2();
  for (const auto& jump : sigma.jumps()) {
    double proj = 0.0;
    for (std::size_t j = 0; j < p.dim(); ++j) proj += jump.alpha[j] * p[j](jump.x);
    if (proj * proj > tol * scale) return false;
  }
  return true;
}

}  // namespace bandinv
