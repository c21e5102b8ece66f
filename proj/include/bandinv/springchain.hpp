#pragma once

#include <cstddef>
#include <vector>

#include "bandinv/bandmat.hpp"

namespace bandinv {

/// N bodies on a line. k[i] (i = 0..N) is the spring between bodies i and
/// i+1 with bodies 0 and N+1 being the walls. kp[i] (i = 0..N-1) couples
/// bodies i and i+2, again with walls at 0 and N+1.
struct SpringChain {
  std::vector<double> masses;
  std::vector<double> k;
  std::vector<double> kp;
};

/// Throws NonPositiveMass, or InvalidArgument on bad lengths or a negative
/// spring constant.
void validate_chain(const SpringChain& c);

/// L = M^{-1/2} K M^{-1/2} as a half-bandwidth 2 matrix. The main diagonal is
/// negative, so x'' = L x.
BandMatrix build_spring_matrix(const SpringChain& c);

/// sqrt|lambda| over the eigenvalues of a, ascending.
std::vector<double> frequencies(const BandMatrix& a);

struct ContinuedFraction {
  double lhs;
  double rhs;
  double residual;  // |lhs - rhs|
};

/// Recovers (k_{j+1} + kp_j) / m_{j+1} from the matrix entries around body j,
/// 2 <= j <= N-2 (1-based), using |d0_j| in the denominator.
/// Throws IndexOutOfRange, DivisionByZero.
ContinuedFraction continued_fraction_check(const SpringChain& c, std::size_t j);

/// Same quotient with the denominator d0_j + (k_j + kp_{j-1}) / m_j and a
/// positive d0_j. Kept to document how far off that form is.
ContinuedFraction continued_fraction_literal(const SpringChain& c, std::size_t j);

}  // namespace bandinv
