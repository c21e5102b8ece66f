#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bandinv {

class SpectralFunction;

/// Integer extended by a bottom element. Used for degrees and heights, where the
/// zero polynomial sits below every genuine value.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr explicit ExtendedInt(long value) : finite_(true), value_(value) {}

  static constexpr ExtendedInt neg_inf() { return ExtendedInt{}; }

  constexpr bool is_neg_inf() const { return !finite_; }
  /// Requires !is_neg_inf().
  long value() const;

  friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedInt a, ExtendedInt b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const;

 private:
  bool finite_ = false;
  long value_ = 0;
};

inline constexpr ExtendedInt NEG_INF = ExtendedInt::neg_inf();

/// Real polynomial in z, coefficients in ascending degree, kept trimmed so the
/// highest stored coefficient is nonzero.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<double> coeffs);
  ScalarPoly(std::initializer_list<double> coeffs) : ScalarPoly(std::vector<double>(coeffs)) {}

  static ScalarPoly monomial(std::size_t degree, double coeff = 1.0);

  const std::vector<double>& coeffs() const { return c_; }
  ExtendedInt degree() const;
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^k; zero past the degree.
  double coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  double operator()(double x) const;

  ScalarPoly times_z() const;
  ScalarPoly scaled(double factor) const;
  /// Zeroes coefficients with |c| <= rel * max|c|.
  ScalarPoly trimmed(double rel) const;

  friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

 private:
  void trim();
  std::vector<double> c_;
};

/// n-dimensional vector polynomial (R_1, ..., R_n)^t.
class VecPoly {
 public:
  explicit VecPoly(std::size_t n);
  explicit VecPoly(std::vector<ScalarPoly> components);

  std::size_t dim() const { return comps_.size(); }
  /// 0-based component access.
  const ScalarPoly& operator[](std::size_t j) const { return comps_[j]; }
  const std::vector<ScalarPoly>& components() const { return comps_; }

  bool is_zero() const;
  ExtendedInt max_degree() const;
  /// Sum of squares of all coefficients.
  double coeff_norm2() const;

  friend bool operator==(const VecPoly&, const VecPoly&) = default;

 private:
  std::vector<ScalarPoly> comps_;
};

struct Term {
  double coeff;
  const VecPoly* poly;
};

/// max_j n*deg(R_j) + j - 1 over 1-based component index j.
ExtendedInt height(const VecPoly& p);

/// The i-th (1-based) vector of the monomial sequence: component ((i-1) mod n)
/// holds z^floor((i-1)/n).
VecPoly basis_e(std::size_t i, std::size_t n);

std::vector<double> eval(const VecPoly& p, double x);

VecPoly shift_mul(const VecPoly& p);

/// Exact coefficientwise sum of coeff * poly. Throws MixedDimension.
VecPoly linear_combine(std::span<const Term> terms);
VecPoly linear_combine(std::initializer_list<Term> terms);

VecPoly scaled(const VecPoly& p, double factor);

/// Residue cleanup: zero every coefficient below rel * (largest coefficient).
VecPoly trimmed(const VecPoly& p, double rel);

/// Returns r(z) = p((z - shift) / scale).
VecPoly affine_substitute(const VecPoly& p, double shift, double scale);

/// True iff |alpha_k^t p(x_k)|^2 <= tol * scale at every jump, with
/// scale = (1 + max|x_k|)^(2 maxdeg) * ||p||^2_coeff. Throws DimensionMismatch.
bool is_interpolation_solution(const VecPoly& p, const SpectralFunction& sigma, double tol);

}  // namespace bandinv
