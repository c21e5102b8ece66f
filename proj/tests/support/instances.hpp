#pragma once

// Random members of the band class and related fixtures, shared by the unit
// tests, the acceptance runner and the benchmarks.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "bandinv/bandmat.hpp"
#include "bandinv/springchain.hpp"

namespace bandinv::testing {

struct Instance {
  BandMatrix matrix;
  DegenerationProfile profile;
};

/// Draws a matrix with the requested number of degenerating diagonals, or
/// fewer when N leaves no room. Constrained positive entries lie in
/// [0.5, 1.5]; unconstrained ones in [-1, 1].
inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t big_n, std::size_t want_j0) {
  std::uniform_real_distribution<double> free(-1.0, 1.0), pos(0.5, 1.5);
  std::vector<std::vector<double>> diags(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    diags[j].resize(big_n > j ? big_n - j : 0);
    for (double& v : diags[j]) v = free(rng);
  }

  DegenerationProfile prof;
  std::size_t prev = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t diag = n - j;
    const std::size_t last = big_n - n + j;
    std::size_t cut = last + 1;
    // The innermost diagonal never degenerates; a cut needs at least one
    // positive entry before it.
    if (j < want_j0 && diag > 1 && prev + 2 <= last) {
      std::uniform_int_distribution<std::size_t> pick(prev + 2, last);
      cut = pick(rng);
      ++prof.j0;
    }
    for (std::size_t k = prev + 1; k <= last; ++k) diags[diag][k - 1] = k < cut ? pos(rng) : 0.0;
    prof.m.push_back(cut);
    prev = cut;
  }
  return {BandMatrix(n, std::move(diags)), prof};
}

inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t big_n) {
  std::uniform_int_distribution<std::size_t> j0(0, n - 1);
  return random_instance(rng, n, big_n, j0(rng));
}

/// Upper triangular with positive diagonal.
inline TriangularInit random_tinit(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> off(-1.0, 1.0), diag(0.5, 2.0);
  DenseMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = diag(rng);
    for (std::size_t j = i + 1; j < n; ++j) t(i, j) = off(rng);
  }
  return TriangularInit(std::move(t));
}

/// Two copies of one Jacobi matrix interleaved into half-bandwidth 2, so every
/// eigenvalue has multiplicity 2. half is the size of each copy.
inline BandMatrix doubled_jacobi(std::mt19937_64& rng, std::size_t half) {
  std::uniform_real_distribution<double> free(-1.0, 1.0), pos(0.5, 1.5);
  std::vector<double> a(half), b(half - 1);
  for (double& v : a) v = free(rng);
  for (double& v : b) v = pos(rng);
  const std::size_t big_n = 2 * half;
  std::vector<std::vector<double>> diags(3);
  diags[0].resize(big_n);
  diags[1].assign(big_n - 1, 0.0);
  diags[2].resize(big_n - 2);
  for (std::size_t k = 0; k < big_n; ++k) diags[0][k] = a[k / 2];
  for (std::size_t k = 0; k + 2 < big_n; ++k) diags[2][k] = b[k / 2];
  return BandMatrix(2, std::move(diags));
}

inline SpringChain random_chain(std::mt19937_64& rng, std::size_t big_n) {
  std::uniform_real_distribution<double> mass(0.5, 3.0), spring(0.1, 2.0);
  SpringChain c;
  for (std::size_t i = 0; i < big_n; ++i) c.masses.push_back(mass(rng));
  for (std::size_t i = 0; i <= big_n; ++i) c.k.push_back(spring(rng));
  for (std::size_t i = 0; i < big_n; ++i) c.kp.push_back(spring(rng));
  return c;
}

inline SpringChain uniform_chain(std::size_t big_n) {
  return {std::vector<double>(big_n, 1.0), std::vector<double>(big_n + 1, 1.0), std::vector<double>(big_n, 1.0)};
}

}  // namespace bandinv::testing
