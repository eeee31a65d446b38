#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "degentrig/chebpoly.hpp"

using namespace degentrig;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("coefficient base cases and hand-derived rows") {
  const ChebCoeffs t0 = cheb_coeffs(0);
  REQUIRE(t0.coeffs.size() == 1);
  CHECK(t0.coeffs[0] == 1);

  const ChebCoeffs t1 = cheb_coeffs(1);
  CHECK(t1.coeffs == std::vector<BigInt>{0, 1});

  // one recurrence step: 2y*y - 1
  CHECK(cheb_coeffs(2).coeffs == std::vector<BigInt>({-1, 0, 2}));
  // unrolled once more: 4y^3 - 3y
  CHECK(cheb_coeffs(3).coeffs == std::vector<BigInt>({0, -3, 0, 4}));
}

TEST_CASE("leading coefficient is 2^(n-1)") {
  for (int n = 1; n <= 32; ++n) {
    const ChebCoeffs p = cheb_coeffs(n);
    REQUIRE(p.coeffs.size() == static_cast<std::size_t>(n) + 1);
    CHECK(p.coeffs.back() == BigInt(1) << (n - 1));
  }
}

TEST_CASE("parity: coefficient j vanishes unless j = n mod 2") {
  for (int n = 0; n <= 24; ++n) {
    const ChebCoeffs p = cheb_coeffs(n);
    for (int j = 0; j <= n; ++j) {
      if ((j % 2) != (n % 2)) CHECK(p.coeffs[j] == 0);
    }
  }
}

TEST_CASE("evaluation fixed points") {
  for (int n = 0; n <= 32; ++n) CHECK(cheb_eval(n, 1.0) == 1.0);
  CHECK(cheb_eval(3, 0.5) == -1.0);
}

TEST_CASE("multiple-angle oracle: T_n(cos t) = cos(n t)") {
  for (int n = 0; n <= 16; ++n) {
    for (int i = 0; i < 64; ++i) {
      const double theta = -kPi + (2.0 * kPi) * (i + 0.5) / 64.0;
      const double lhs = cheb_eval(n, std::cos(theta));
      const double rhs = std::cos(n * theta);
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("recurrence evaluation agrees with integer-coefficient Horner") {
  for (int n = 0; n <= 20; ++n) {
    const ChebCoeffs p = cheb_coeffs(n);
    for (const double y : {-1.0, -0.77, -0.25, 0.0, 0.31, 0.66, 1.0}) {
      const double a = cheb_eval(n, y);
      const double b = cheb_eval_coeffs(p, y);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("product polynomial structure") {
  const KmPoly k1 = km_build(1);
  REQUIRE(k1.zeros.size() == 1);
  CHECK(k1.zeros[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(k1.leading_constant == 3.0);

  const KmPoly k2 = km_build(2);
  REQUIRE(k2.zeros.size() == 2);
  CHECK(k2.zeros[0] == doctest::Approx(0.345491502812).epsilon(1e-12));
  CHECK(k2.zeros[1] == doctest::Approx(0.904508497187).epsilon(1e-12));

  for (int m = 1; m <= 12; ++m) {
    const KmPoly km = km_build(m);
    REQUIRE(km.zeros.size() == static_cast<std::size_t>(m));
    double prev = 0.0;
    for (const double z : km.zeros) {
      CHECK(z > prev);
      CHECK(z < 1.0);
      prev = z;
    }
    CHECK(km_eval(km, 0.0) == static_cast<double>(2 * m + 1));
  }
}

TEST_CASE("product polynomial vanishes at its zeros") {
  for (int m = 1; m <= 10; ++m) {
    const KmPoly km = km_build(m);
    for (const double z : km.zeros) CHECK(std::abs(km_eval(km, z)) <= 1e-12);
  }
  CHECK(std::abs(km_eval(km_build(1), 0.75)) <= 1e-14);
}

TEST_CASE("K_1 expands to 3 - 4s") {
  const KmPoly k1 = km_build(1);
  for (const double s : {0.0, 0.2, 0.5, 0.75, 1.0}) {
    CHECK(km_eval(k1, s) == doctest::Approx(3.0 - 4.0 * s).epsilon(1e-14));
  }
}

TEST_CASE("partial sums of shifted T_k reproduce the product polynomial") {
  // 1 + 2 sum_{k<=m} T_k(1 - 2s) = K_m(s)
  for (int m = 1; m <= 10; ++m) {
    const KmPoly km = km_build(m);
    for (const double s : {0.03, 0.2, 0.41, 0.68, 0.97}) {
      double sum = 1.0;
      for (int k = 1; k <= m; ++k) sum += 2.0 * cheb_eval(k, 1.0 - 2.0 * s);
      const double rhs = km_eval(km, s);
      CHECK(std::abs(sum - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
    }
  }
}
