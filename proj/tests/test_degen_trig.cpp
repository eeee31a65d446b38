#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "degentrig/degen_trig.hpp"

using namespace degentrig;

namespace {

constexpr double kPi = std::numbers::pi;

// context with omega = 1: lambda = 1, a = e - 1
DegenContext unit_ctx() { return DegenContext(1.0, std::exp(1.0) - 1.0); }

}  // namespace

TEST_CASE("values at omega = 1 reduce to classical trig") {
  const DegenContext ctx = unit_ctx();
  CHECK(cos_l(ctx, 0.0) == 1.0);
  CHECK(sin_l(ctx, 0.0) == 0.0);
  CHECK(std::abs(cos_l(ctx, kPi) + 1.0) <= 1e-15);
  CHECK(std::abs(sin_l(ctx, kPi / 2.0) - 1.0) <= 1e-15);
  CHECK(std::abs(tan_l(ctx, kPi / 4.0) - 1.0) <= 1e-14);
  CHECK(cosh_l(ctx, 0.0) == 1.0);
  CHECK(cosh_l(ctx, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
}

TEST_CASE("parity") {
  const DegenContext ctx(0.7, 1.3);
  for (const double x : {0.2, 0.9, 1.7, 2.8}) {
    CHECK(cos_l(ctx, -x) == doctest::Approx(cos_l(ctx, x)).epsilon(1e-13));
    CHECK(sin_l(ctx, -x) == doctest::Approx(-sin_l(ctx, x)).epsilon(1e-13));
    CHECK(tan_l(ctx, -x) == doctest::Approx(-tan_l(ctx, x)).epsilon(1e-13));
    CHECK(sinh_l(ctx, -x) == doctest::Approx(-sinh_l(ctx, x)).epsilon(1e-13));
  }
}

TEST_CASE("boundedness on the real branch") {
  for (const double lambda : {-0.5, 0.1, 1.0, 2.0}) {
    for (const double a : {0.3, 1.0, 2.5}) {
      if (1.0 + lambda * a <= 0.0) continue;
      const DegenContext ctx(lambda, a);
      for (int i = -40; i <= 40; ++i) {
        const double x = 0.37 * i;
        CHECK(std::abs(sin_l(ctx, x)) <= 1.0 + 1e-12);
        CHECK(std::abs(cos_l(ctx, x)) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("real reduction matches the complex-exponential definition") {
  for (const double lambda : {-0.4, 0.5, 1.0}) {
    for (const double a : {0.6, 1.0, 1.9}) {
      if (1.0 + lambda * a <= 0.0) continue;
      const DegenContext ctx(lambda, a);
      for (const double x : {-2.3, -0.8, 0.4, 1.6, 3.1}) {
        const Complex e = degen_exp_complex(Complex(0.0, x), lambda, a);
        CHECK(std::abs(e.real() - cos_l(ctx, x)) <= 1e-13);
        CHECK(std::abs(e.imag() - sin_l(ctx, x)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("tan and cot are reciprocal away from poles") {
  const DegenContext ctx(0.5, 1.0);
  for (const double x : {0.4, 1.1, 2.6, -1.9}) {
    CHECK(tan_l(ctx, x) * cot_l(ctx, x) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("poles raise PoleError on exactly-zero denominators") {
  const DegenContext ctx(0.5, 1.0);
  CHECK(tan_l(ctx, 0.0) == 0.0);
  CHECK_THROWS_AS(cot_l(ctx, 0.0), PoleError);
  CHECK_THROWS_AS(coth_l(ctx, 0.0), PoleError);
  CHECK(tanh_l(ctx, 0.0) == 0.0);
}

TEST_CASE("hyperbolic unit relation") {
  for (const double lambda : {-0.5, 0.7, 2.0}) {
    for (const double a : {0.3, 1.0}) {
      const DegenContext ctx(lambda, a);
      for (const double x : {-1.4, 0.3, 0.9, 2.2}) {
        const double ch = cosh_l(ctx, x);
        const double sh = sinh_l(ctx, x);
        CHECK(ch * ch - sh * sh == doctest::Approx(1.0).epsilon(5e-13));
        // brute force from the exponential definitions
        const double ep = degen_exp_closed(x, lambda, a);
        const double em = degen_exp_closed(-x, lambda, a);
        CHECK(0.5 * (ep + em) == doctest::Approx(ch).epsilon(1e-12));
        CHECK(0.5 * (ep - em) == doctest::Approx(sh).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("analytic derivatives match finite differences") {
  const DegenContext ctx(0.5, 1.0);
  CHECK(d_sin_l(ctx, 0.0) == ctx.omega());
  CHECK(d_cos_l(ctx, 0.0) == 0.0);
  const double x = 0.3, h = 1e-5;
  const double fd_cos = (cos_l(ctx, x + h) - cos_l(ctx, x - h)) / (2.0 * h);
  CHECK(std::abs(fd_cos - d_cos_l(ctx, x)) <= 1e-9);
  const double fd_sin = (sin_l(ctx, x + h) - sin_l(ctx, x - h)) / (2.0 * h);
  CHECK(std::abs(fd_sin - d_sin_l(ctx, x)) <= 1e-9);
}

TEST_CASE("classical limit of cos_l at x = 1, a = 1") {
  const DegenContext ctx(1e-12, 1.0);
  CHECK(std::abs(cos_l(ctx, 1.0) - std::cos(1.0)) <= 1e-11);
  CHECK(std::abs(sin_l(ctx, 1.0) - std::sin(1.0)) <= 1e-11);
  CHECK(std::cos(1.0) == doctest::Approx(0.540302305868).epsilon(1e-12));
}
