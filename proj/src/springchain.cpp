#include "bandinv/springchain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bandinv/error.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv {

void validate_chain(const SpringChain& c) {
  const std::size_t big_n = c.masses.size();
  if (big_n == 0) throw Error(Errc::InvalidArgument, "chain has no bodies");
  if (c.k.size() != big_n + 1) throw Error(Errc::InvalidArgument, "k needs N+1 entries");
  if (c.kp.size() != big_n) throw Error(Errc::InvalidArgument, "kp needs N entries");
  for (std::size_t i = 0; i < big_n; ++i)
    if (!(c.masses[i] > 0.0)) throw Error(Errc::NonPositiveMass, "mass " + std::to_string(i + 1) + " is not positive");
  for (double v : c.k)
    if (!(v >= 0.0)) throw Error(Errc::InvalidArgument, "negative spring constant in k");
  for (double v : c.kp)
    if (!(v >= 0.0)) throw Error(Errc::InvalidArgument, "negative spring constant in kp");
}

namespace {

// 1-based accessors with the virtual kp_0 = kp_{N+1} = 0.
struct View {
  const SpringChain& c;
  double m(std::size_t i) const { return c.masses[i - 1]; }
  double k(std::size_t i) const { return c.k[i - 1]; }
  double kp(std::size_t i) const { return i == 0 || i > c.kp.size() ? 0.0 : c.kp[i - 1]; }
  double d0(std::size_t j) const { return -(k(j + 1) + kp(j + 1) + k(j) + kp(j - 1)) / m(j); }
  double d1(std::size_t j) const { return k(j + 1) / std::sqrt(m(j) * m(j + 1)); }
  double d2(std::size_t j) const { return kp(j + 1) / std::sqrt(m(j) * m(j + 2)); }

  double numerator(std::size_t j) const {
    return d1(j) * d1(j) + std::sqrt(m(j + 2) / m(j + 1)) * d1(j) * d2(j) +
           std::sqrt(m(j - 1) / m(j)) * d2(j - 1) * d1(j) +
           std::sqrt(m(j - 1) * m(j + 2) / (m(j + 1) * m(j))) * d2(j) * d2(j - 1);
  }
};

void check_index(const SpringChain& c, std::size_t j) {
  const std::size_t big_n = c.masses.size();
  if (j < 2 || j + 2 > big_n)
    throw Error(Errc::IndexOutOfRange, "j = " + std::to_string(j) + " outside 2.." +
                                           (big_n >= 2 ? std::to_string(big_n - 2) : std::string("(empty)")));
}

ContinuedFraction quotient(double lhs, double num, double den) {
  if (den == 0.0) throw Error(Errc::DivisionByZero, "continued-fraction denominator vanishes");
  const double rhs = num / den;
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace

BandMatrix build_spring_matrix(const SpringChain& c) {
  validate_chain(c);
  const std::size_t big_n = c.masses.size();
  const View v{c};
  std::vector<std::vector<double>> diags(3);
  for (std::size_t j = 1; j <= big_n; ++j) diags[0].push_back(v.d0(j));
  for (std::size_t j = 1; j + 1 <= big_n; ++j) diags[1].push_back(v.d1(j));
  for (std::size_t j = 1; j + 2 <= big_n; ++j) diags[2].push_back(v.d2(j));
  return BandMatrix(2, std::move(diags));
}

std::vector<double> frequencies(const BandMatrix& a) {
  std::vector<double> w;
  for (double lambda : eig_symmetric(to_dense(a)).values) w.push_back(std::sqrt(std::abs(lambda)));
  std::sort(w.begin(), w.end());
  return w;
}

ContinuedFraction continued_fraction_check(const SpringChain& c, std::size_t j) {
  validate_chain(c);
  check_index(c, j);
  const View v{c};
  const double lhs = (v.k(j + 1) + v.kp(j)) / v.m(j + 1);
  return quotient(lhs, v.numerator(j), std::abs(v.d0(j)) - (v.k(j) + v.kp(j - 1)) / v.m(j));
}

ContinuedFraction continued_fraction_literal(const SpringChain& c, std::size_t j) {
  validate_chain(c);
  check_index(c, j);
  const View v{c};
  const double lhs = (v.k(j + 1) + v.kp(j)) / v.m(j + 1);
  return quotient(lhs, v.numerator(j), -v.d0(j) + (v.k(j) + v.kp(j - 1)) / v.m(j));
}

}  // namespace bandinv
