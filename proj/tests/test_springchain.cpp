#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bandinv/error.hpp"
#include "bandinv/springchain.hpp"
#include "support/instances.hpp"

using namespace bandinv;

namespace {

Errc code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("uniform three-body chain") {
  const BandMatrix l = build_spring_matrix(testing::uniform_chain(3));
  CHECK(l.diagonals()[0] == std::vector<double>{-3, -4, -3});
  CHECK(l.diagonals()[1] == std::vector<double>{1, 1});
  CHECK(l.diagonals()[2] == std::vector<double>{1});
}

TEST_CASE("chains without next-nearest springs are tridiagonal") {
  SpringChain c = testing::uniform_chain(5);
  c.kp.assign(5, 0.0);
  const BandMatrix l = build_spring_matrix(c);
  for (double v : l.diagonal(2)) CHECK(v == 0.0);
  CHECK_THROWS_AS(validate_band(l), Error);
  const BandMatrix j = shrink_bandwidth(l);
  CHECK(j.half_bandwidth() == 1);
  CHECK(validate_band(j).m == std::vector<std::size_t>{5});
}

TEST_CASE("frequencies") {
  const SpringChain one{{1.0}, {1.0, 1.0}, {0.0}};
  const auto w1 = frequencies(build_spring_matrix(one));
  REQUIRE(w1.size() == 1);
  CHECK(std::abs(w1[0] - std::sqrt(2.0)) < 1e-12);

  const SpringChain two{{1.0, 1.0}, {1.0, 1.0, 1.0}, {0.0, 0.0}};
  const BandMatrix l = build_spring_matrix(two);
  CHECK(l.at(0, 0) == -2.0);
  CHECK(l.at(0, 1) == 1.0);
  const auto w2 = frequencies(l);
  CHECK(std::abs(w2[0] - 1.0) < 1e-12);
  CHECK(std::abs(w2[1] - std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("joint scaling leaves the matrix and frequencies unchanged") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    SpringChain c = testing::random_chain(rng, 3 + trial % 8);
    const BandMatrix a = build_spring_matrix(c);
    const auto w = frequencies(a);
    const double f = 0.25 + trial;
    for (auto* v : {&c.masses, &c.k, &c.kp})
      for (double& x : *v) x *= f;
    const BandMatrix b = build_spring_matrix(c);
    for (std::size_t j = 0; j <= 2; ++j)
      for (std::size_t k = 0; k < a.diagonal(j).size(); ++k)
        CHECK(std::abs(a.diagonal(j)[k] - b.diagonal(j)[k]) <= 1e-12 * (1 + std::abs(a.diagonal(j)[k])));
    const auto v = frequencies(b);
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(std::abs(w[k] - v[k]) < 1e-12 * (1 + w[k]));
  }
}

TEST_CASE("positive chains are class members without degeneration") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t big_n = 3 + trial % 10;
    const BandMatrix a = build_spring_matrix(testing::random_chain(rng, big_n));
    for (double v : a.diagonal(1)) CHECK(v > 0.0);
    for (double v : a.diagonal(2)) CHECK(v > 0.0);
    const auto p = validate_band(a);
    CHECK(p.m == std::vector<std::size_t>{big_n - 1, big_n});
    CHECK(p.j0 == 0);
  }
}

TEST_CASE("cutting next-nearest springs degenerates the outer diagonal") {
  std::mt19937_64 rng(43);
  for (std::size_t i0 = 3; i0 <= 8; ++i0) {
    SpringChain c = testing::random_chain(rng, 8);
    // kp_i couples bodies i-1 and i+1, so d^(2)_j = kp_{j+1}; zero from i0 on.
    for (std::size_t i = i0; i <= 8; ++i) c.kp[i - 1] = 0.0;
    const auto p = validate_band(build_spring_matrix(c));
    CHECK(p.m[0] == std::min<std::size_t>(i0 - 1, 7));
    CHECK(p.j0 == (i0 - 1 < 7 ? 1u : 0u));
  }
}

TEST_CASE("continued fraction") {
  const SpringChain u = testing::uniform_chain(5);
  const auto r = continued_fraction_check(u, 2);
  CHECK(r.lhs == 2.0);
  CHECK(r.residual <= 1e-12);
  // Adding the wall term instead of subtracting it breaks the identity.
  CHECK(continued_fraction_literal(u, 2).residual > 1.0);

  // kp = 0: k_{j+1}/m_{j+1} = (d1_j)^2 / (|d0_j| - k_j/m_j).
  std::mt19937_64 rng(44);
  SpringChain c = testing::random_chain(rng, 7);
  c.kp.assign(7, 0.0);
  for (std::size_t j = 2; j <= 5; ++j) {
    const auto s = continued_fraction_check(c, j);
    const double m0 = c.masses[j - 1], m1 = c.masses[j];
    const double d1 = c.k[j] / std::sqrt(m0 * m1);
    const double d0 = (c.k[j] + c.k[j - 1]) / m0;
    CHECK(s.lhs == doctest::Approx(c.k[j] / m1));
    CHECK(s.rhs == doctest::Approx(d1 * d1 / (d0 - c.k[j - 1] / m0)));
  }

  for (int trial = 0; trial < 50; ++trial) {
    const SpringChain ch = testing::random_chain(rng, 4 + trial % 9);
    for (std::size_t j = 2; j + 2 <= ch.masses.size(); ++j) {
      const auto s = continued_fraction_check(ch, j);
      CHECK(s.residual <= 1e-10 * (1 + std::abs(s.lhs)));
    }
  }
}

TEST_CASE("spring chain errors") {
  const SpringChain u = testing::uniform_chain(5);
  CHECK(code_of([&] { continued_fraction_check(u, 1); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { continued_fraction_check(u, 4); }) == Errc::IndexOutOfRange);
  SpringChain bad = u;
  bad.masses[2] = 0.0;
  CHECK(code_of([&] { build_spring_matrix(bad); }) == Errc::NonPositiveMass);
  bad = u;
  bad.k[0] = -1.0;
  CHECK(code_of([&] { build_spring_matrix(bad); }) == Errc::InvalidArgument);
  // k_{j+1} + kp_{j+1} = 0 empties the denominator.
  SpringChain z = u;
  z.k[2] = 0.0;
  z.kp[2] = 0.0;
  CHECK(code_of([&] { continued_fraction_check(z, 2); }) == Errc::DivisionByZero);
}
