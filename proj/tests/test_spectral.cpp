#include <doctest.h>

#include <cmath>
#include <random>

#include "bandinv/error.hpp"
#include "bandinv/spectral.hpp"
#include "support/instances.hpp"

using namespace bandinv;

namespace {

const double kRoot = 1.0 / std::sqrt(2.0);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) { return (a - b).max_abs(); }

DenseMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("eig_symmetric examples") {
  const auto e = eig_symmetric(DenseMatrix{{0, 1}, {1, 0}});
  CHECK(e.values[0] == doctest::Approx(-1.0));
  CHECK(e.values[1] == doctest::Approx(1.0));
  CHECK(e.vectors(0, 0) == doctest::Approx(kRoot));
  CHECK(e.vectors(1, 0) == doctest::Approx(-kRoot));
  CHECK(e.vectors(0, 1) == doctest::Approx(kRoot));
  CHECK(e.vectors(1, 1) == doctest::Approx(kRoot));

  const auto id = eig_symmetric(DenseMatrix::identity(4));
  CHECK(id.vectors == DenseMatrix::identity(4));
  for (double v : id.values) CHECK(v == 1.0);

  const auto d = eig_symmetric(DenseMatrix{{3, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CHECK(d.values == std::vector<double>{1, 2, 3});
  CHECK(d.vectors == DenseMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("eig_symmetric errors") {
  try {
    eig_symmetric(DenseMatrix{{0, 1}, {2, 0}});
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
  CHECK_THROWS_AS(eig_symmetric(DenseMatrix(2, 3)), Error);
}

TEST_CASE("eig_symmetric residual and orthonormality up to N = 64") {
  std::mt19937_64 rng(9);
  for (std::size_t n : {1, 2, 5, 17, 40, 64}) {
    const DenseMatrix m = random_symmetric(rng, n);
    const auto e = eig_symmetric(m);
    const DenseMatrix av = m * e.vectors;
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, std::abs(av(r, k) - e.values[k] * e.vectors(r, k)));
    CHECK(worst <= 1e-9 * m.frobenius());
    CHECK(max_abs_diff(e.vectors.transposed() * e.vectors, DenseMatrix::identity(n)) < 1e-12);
    for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] <= e.values[k]);
  }
}

TEST_CASE("spectral_function_identity") {
  const SpectralFunction s = spectral_function_identity(BandMatrix(1, {{0, 0}, {1}}));
  REQUIRE(s.jumps().size() == 2);
  CHECK(s.jumps()[0].x == doctest::Approx(-1.0));
  CHECK(s.jumps()[1].x == doctest::Approx(1.0));
  for (const Jump& j : s.jumps()) CHECK(j.alpha[0] * j.alpha[0] == doctest::Approx(0.5));

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t big_n = n + 1 + static_cast<std::size_t>(trial) % 10;
    const auto inst = testing::random_instance(rng, n, big_n);
    const SpectralFunction sigma = spectral_function_identity(inst.matrix);
    CHECK(sigma.dim() == big_n);
    CHECK(max_abs_diff(total_mass(sigma), DenseMatrix::identity(n)) < 1e-9);

    // First moment reproduces the leading n x n block.
    DenseMatrix first(n, n);
    for (const Jump& j : sigma.jumps())
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) first(r, c) += j.x * j.alpha[r] * j.alpha[c];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) CHECK(std::abs(first(r, c) - inst.matrix.at(r, c)) < 1e-9);
  }
}

TEST_CASE("transform_sigma") {
  std::mt19937_64 rng(12);
  const auto inst = testing::random_instance(rng, 2, 7, 1);
  const SpectralFunction si = spectral_function_identity(inst.matrix);
  CHECK(transform_sigma(si, TriangularInit::identity(2)) == si);

  for (int trial = 0; trial < 20; ++trial) {
    const TriangularInit t = testing::random_tinit(rng, 2);
    const SpectralFunction st = transform_sigma(si, t);
    for (std::size_t k = 0; k < si.dim(); ++k) {
      // T^t alpha' = alpha.
      const auto& a = si.jumps()[k].alpha;
      const auto& b = st.jumps()[k].alpha;
      for (std::size_t i = 0; i < 2; ++i) {
        double back = 0.0;
        for (std::size_t l = 0; l <= i; ++l) back += t(l, i) * b[l];
        CHECK(std::abs(back - a[i]) < 1e-12);
      }
    }
  }

  const SpectralFunction s1 = spectral_function_identity(BandMatrix(1, {{0, 0, 0}, {1, 1}}));
  const SpectralFunction s2 = transform_sigma(s1, TriangularInit(DenseMatrix{{2.0}}));
  for (std::size_t k = 0; k < 3; ++k) {
    const double w1 = s1.jumps()[k].alpha[0] * s1.jumps()[k].alpha[0];
    const double w2 = s2.jumps()[k].alpha[0] * s2.jumps()[k].alpha[0];
    CHECK(w2 == doctest::Approx(w1 / 4.0));
  }
}

TEST_CASE("validate_sigma") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = testing::random_instance(rng, 1 + trial % 3, 4 + trial % 6);
    CHECK_NOTHROW(validate_sigma(spectral_function_identity(inst.matrix)));
  }

  auto code = [](const SpectralFunction& s) {
    try {
      validate_sigma(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code(SpectralFunction(2, 3, {{-1, {0.5, 0}}, {0, {0.5, 0}}, {1, {0.7, 0}}})) == Errc::DeadComponent);
  CHECK(code(SpectralFunction(2, 3, {{-1, {0.5, 0}}, {0, {0, 0}}, {1, {0.7, 1}}})) == Errc::ZeroJump);
  CHECK(code(SpectralFunction(2, 2, {{1, {1, 1}}, {1, {2, 2}}})) == Errc::RankSumMismatch);
  CHECK_NOTHROW(validate_sigma(SpectralFunction(2, 2, {{1, {1, 0}}, {1, {0, 1}}})));
}

TEST_CASE("SpectralFunction ordering and shape") {
  const SpectralFunction a(1, 3, {{2, {1}}, {-1, {2}}, {2, {-1}}});
  CHECK(a.jumps()[0].x == -1);
  CHECK(a.jumps()[1].alpha[0] == -1);
  CHECK(a == SpectralFunction(1, 3, {{2, {-1}}, {2, {1}}, {-1, {2}}}));
  CHECK_THROWS_AS(SpectralFunction(1, 2, {{0, {1}}}), Error);
  CHECK_THROWS_AS(SpectralFunction(2, 1, {{0, {1}}}), Error);
}

TEST_CASE("inner product laws") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t big_n = n + 1 + static_cast<std::size_t>(trial) % 9;
    const auto inst = testing::random_instance(rng, n, big_n);
    const TriangularInit t = testing::random_tinit(rng, n);
    const SpectralFunction si = spectral_function_identity(inst.matrix);
    const SpectralFunction st = transform_sigma(si, t);
    const PTable table = solve_recurrence(inst.matrix, t, inst.profile);

    for (std::size_t j = 0; j < big_n; ++j)
      for (std::size_t k = 0; k < big_n; ++k) {
        const double g = inner(st, table.p[j], table.p[k]);
        CHECK(std::abs(g - (j == k ? 1.0 : 0.0)) < 1e-8);
        CHECK(g == inner(st, table.p[k], table.p[j]));
      }
    for (const auto& q : table.q) {
      CHECK(std::abs(inner(st, q, q)) < 1e-12);
      for (const auto& p : table.p) CHECK(std::abs(inner(st, q, p)) < 1e-8);
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        CHECK(std::abs(inner(si, basis_e(i, n), basis_e(j, n)) - (i == j ? 1.0 : 0.0)) < 1e-10);
  }
  CHECK_THROWS_AS(inner(SpectralFunction(1, 1, {{0, {1}}}), basis_e(1, 2), basis_e(1, 2)), Error);
}

TEST_CASE("inner products ignore the split of a repeated eigenvalue") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  const BandMatrix a = testing::doubled_jacobi(rng, 4);
  const SpectralFunction s = spectral_function_identity(a);
  // Rotate each pair of jumps at a shared node by a random angle.
  std::vector<Jump> jumps = s.jumps();
  for (std::size_t k = 0; k + 1 < jumps.size(); k += 2) {
    const double c = std::cos(angle(rng)), sn = std::sqrt(1.0 - c * c);
    for (std::size_t i = 0; i < 2; ++i) {
      const double u = jumps[k].alpha[i], v = jumps[k + 1].alpha[i];
      jumps[k].alpha[i] = c * u - sn * v;
      jumps[k + 1].alpha[i] = sn * u + c * v;
    }
  }
  const SpectralFunction r(2, s.dim(), jumps);
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j)
      CHECK(inner(s, basis_e(i, 2), basis_e(j, 2)) == doctest::Approx(inner(r, basis_e(i, 2), basis_e(j, 2))).epsilon(1e-10));
  const auto ms = merged_jumps(s), mr = merged_jumps(r);
  REQUIRE(ms.size() == 4);
  REQUIRE(mr.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(ms[k].count == 2);
    CHECK(max_abs_diff(ms[k].weight, mr[k].weight) < 1e-12);
  }
}
