#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "degentrig/degen_core.hpp"

using namespace degentrig;
using BigRat = boost::multiprecision::cpp_rational;

namespace {

// Independent big-rational oracle for omega: a * sum_j (-u)^j / (j+1) with
// u = lambda*a, summed until terms drop below 2^-120. Inputs are converted to
// their exact binary rational values, so the oracle evaluates the same
// function of the same floats as the implementation.
double omega_oracle(double lambda, double a) {
  const BigRat u = BigRat(lambda) * BigRat(a);
  REQUIRE(abs(u) < 1);  // oracle only valid inside the series radius
  const BigRat eps = BigRat(1, boost::multiprecision::cpp_int(1) << 120);
  BigRat acc = 0;
  BigRat pw = 1;
  for (int j = 0; j < 4096; ++j) {
    const BigRat term = pw / (j + 1);
    acc += term;
    if (abs(term) < eps) break;
    pw *= -u;
  }
  return (BigRat(a) * acc).convert_to<double>();
}

// Exact binomial value of the terminating series: sum_n C(k,n) (lambda*t)^n.
BigRat terminating_oracle(int k, double lambda, double t) {
  const BigRat u = BigRat(lambda) * BigRat(t);
  BigRat acc = 0;
  BigRat binom = 1;
  BigRat pw = 1;
  for (int n = 0; n <= k; ++n) {
    acc += binom * pw;
    binom = binom * (k - n) / (n + 1);
    pw *= u;
  }
  return acc;
}

}  // namespace

TEST_CASE("falling factorial basics") {
  CHECK(falling_factorial(1.75, 0, -3.0) == 1.0);
  CHECK(falling_factorial(3.0, 3, 1.0) == 6.0);
  CHECK(falling_factorial(1.0, 2, 0.5) == 0.5);
  CHECK(falling_factorial(0.0, 1, 0.5) == 0.0);
  CHECK_THROWS_AS(falling_factorial(1.0, -1, 1.0), DomainError);
}

TEST_CASE("falling factorial complex") {
  const Complex i(0.0, 1.0);
  CHECK(falling_factorial_complex(i, 1, 1.0) == i);
  CHECK(falling_factorial_complex(i, 2, 1.0) == Complex(-1.0, -1.0));
  CHECK(falling_factorial_complex(2.0 * i, 0, 0.3) == Complex(1.0, 0.0));
  // cross-check the hand expansion used by the exact-series tests
  const Complex fff3 = falling_factorial_complex(i, 3, 1.0);
  CHECK(fff3.real() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(fff3.imag() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("omega reference values") {
  CHECK(omega(1.0, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(std::abs(omega(1.0, std::exp(1.0) - 1.0) - 1.0) <= 1e-15);
  // small-lambda series value against the big-rational oracle
  const double w = omega(1e-8, 1.0);
  CHECK(w == doctest::Approx(omega_oracle(1e-8, 1.0)).epsilon(1e-14));
  CHECK(w == doctest::Approx(1.0 - 5e-9).epsilon(1e-12));
}

TEST_CASE("omega small-lambda stability") {
  const double w = omega(1e-12, 1.0);
  const double ref = omega_oracle(1e-12, 1.0);
  CHECK(std::abs(w - ref) / std::abs(ref) <= 1e-12);
}

TEST_CASE("omega domain errors") {
  CHECK_THROWS_AS(omega(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(omega(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(omega(-0.5, 2.5), DomainError);
}

TEST_CASE("omega sign follows a") {
  for (const double lambda : {0.5, -0.5, 2.0}) {
    for (const double a : {0.3, 1.0, -0.4}) {
      if (1.0 + lambda * a <= 0.0) continue;
      const double w = omega(lambda, a);
      CHECK(std::signbit(w) == std::signbit(a));
    }
  }
}

TEST_CASE("closed form reference values") {
  CHECK(degen_exp_closed(1.0, 1.0, 0.5) == 1.5);
  CHECK(degen_exp_closed(2.0, 1.0, 3.0) == 16.0);
  CHECK(degen_exp_closed(0.0, -0.3, 1.0) == 1.0);
  CHECK_THROWS_AS(degen_exp_closed(1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("series evaluation terminates on integer exponent ratios") {
  const SeriesEval e1 = degen_exp_series(1.0, 1.0, 0.7, 50);
  CHECK(e1.value == 1.7);
  CHECK(e1.terminated);
  CHECK(e1.terms_used == 2);

  const SeriesEval e2 = degen_exp_series(2.0, 1.0, 3.0, 50);
  CHECK(e2.value == 16.0);
  CHECK(e2.terminated);
  CHECK(e2.terms_used == 3);
  CHECK_FALSE(e2.outside_radius);  // terminated, so no radius warning
}

TEST_CASE("series agrees with closed form inside the radius") {
  // x/lambda = 2, so this instance happens to terminate and both paths are exact
  const SeriesEval e = degen_exp_series(0.5, 0.25, 0.8, 60);
  const double closed = degen_exp_closed(0.5, 0.25, 0.8);
  CHECK(e.value == doctest::Approx(closed).epsilon(1e-13));
  CHECK(e.terminated);
  CHECK_FALSE(e.outside_radius);

  // non-terminating instance: the relative stop rule decides
  const SeriesEval g = degen_exp_series(0.37, 0.25, 0.8, 60);
  CHECK(g.value == doctest::Approx(degen_exp_closed(0.37, 0.25, 0.8)).epsilon(1e-13));
  CHECK_FALSE(g.terminated);
  CHECK(g.last_term_magnitude <= std::abs(g.value) * 1e-14);
  CHECK(g.last_term_magnitude > 0.0);
}

TEST_CASE("max_terms caps the partial sum") {
  const SeriesEval e = degen_exp_series(0.37, 0.25, 0.8, 3);
  CHECK(e.terms_used == 3);
  CHECK_FALSE(e.terminated);
  CHECK(e.last_term_magnitude > 0.0);
}

TEST_CASE("series flags |lambda*t| >= 1 when it does not terminate") {
  const SeriesEval e = degen_exp_series(0.3, 1.0, 1.5, 40);
  CHECK(e.outside_radius);
  const SeriesEval ok = degen_exp_series(0.3, 1.0, 0.5, 40);
  CHECK_FALSE(ok.outside_radius);
}

TEST_CASE("terminating cases are exact against the big-rational oracle") {
  const double lambdas[] = {1.0, 0.5, -0.5, 0.25, 2.0};
  const double ts[] = {0.5, 0.75, 1.5};
  for (const double lambda : lambdas) {
    for (const double t : ts) {
      if (1.0 + lambda * t <= 0.0) continue;
      for (int k = 0; k <= 4; ++k) {
        const double x = k * lambda;
        const BigRat expected = terminating_oracle(k, lambda, t);
        const SeriesEval series = degen_exp_series(x, lambda, t, 40);
        CHECK(BigRat(series.value) == expected);
        CHECK(series.terminated);
        CHECK(BigRat(degen_exp_closed(x, lambda, t)) == expected);
      }
    }
  }
}

TEST_CASE("group law of the closed form") {
  const double xs[] = {-2.0, -0.7, 0.3, 1.1, 2.5};
  for (const double lambda : {0.5, -0.5, 1.0, 2.0}) {
    for (const double t : {0.3, 1.0, 1.7}) {
      if (1.0 + lambda * t <= 0.0) continue;
      for (const double x : xs) {
        for (const double y : xs) {
          const double lhs =
              degen_exp_closed(x, lambda, t) * degen_exp_closed(y, lambda, t);
          const double rhs = degen_exp_closed(x + y, lambda, t);
          CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("series and closed form agree to 1e-10 for |lambda*t| <= 0.5, |x| <= 4") {
  int checked = 0;
  for (const double lambda : {-0.6, -0.25, 0.25, 0.7, 1.0}) {
    for (const double t : {-0.4, 0.2, 0.5}) {
      if (std::abs(lambda * t) > 0.5 || 1.0 + lambda * t <= 0.0) continue;
      for (const double x : {-4.0, -1.3, 0.4, 2.2, 4.0}) {
        const SeriesEval s = degen_exp_series(x, lambda, t, 200);
        const double c = degen_exp_closed(x, lambda, t);
        CHECK(std::abs(s.value - c) / std::abs(c) <= 1e-10);
        ++checked;
      }
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("classical limit of the closed form has O(lambda) error") {
  const double x = 1.3, t = 0.8;
  std::vector<double> ll, le;
  for (int e = 3; e <= 15; ++e) {
    const double lambda = std::ldexp(1.0, -e);
    const double err = std::abs(degen_exp_closed(x, lambda, t) - std::exp(x * t));
    REQUIRE(err > 0.0);
    ll.push_back(std::log(lambda));
    le.push_back(std::log(err));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(ll.size());
  for (std::size_t i = 0; i < ll.size(); ++i) {
    sx += ll[i];
    sy += le[i];
    sxx += ll[i] * ll[i];
    sxy += ll[i] * le[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("complex exponential") {
  const Complex one = degen_exp_complex(Complex(0.0, 0.0), 1.0, 1.0);
  CHECK(one.real() == 1.0);
  CHECK(one.imag() == 0.0);

  // omega(1,1) = log 2, so exponent i*pi/log2 lands on -1
  const Complex z(0.0, std::numbers::pi / std::log(2.0));
  const Complex v = degen_exp_complex(z, 1.0, 1.0);
  CHECK(std::abs(v - Complex(-1.0, 0.0)) <= 1e-15);

  // conjugate exponents multiply to one
  for (const double x : {0.3, 1.9, -2.4}) {
    const Complex p = degen_exp_complex(Complex(0.0, x), 0.7, 1.1) *
                      degen_exp_complex(Complex(0.0, -x), 0.7, 1.1);
    CHECK(std::abs(p - Complex(1.0, 0.0)) <= 1e-14);
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(DegenContext(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(DegenContext(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DegenContext(-0.5, 2.5), DomainError);
  CHECK_THROWS_AS(DegenContext(std::nan(""), 1.0), DomainError);
  const DegenContext ctx(1.0, 1.0);
  CHECK(ctx.omega() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}
