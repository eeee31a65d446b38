#pragma once

#include <complex>

#include "degentrig/errors.hpp"

namespace degentrig {

using Scalar = double;
using Complex = std::complex<double>;

/// Generalized falling factorial x(x - lambda)(x - 2 lambda)...(x - (n-1) lambda),
/// with the empty product equal to 1 for n = 0.
Scalar falling_factorial(Scalar x, int n, Scalar lambda);

/// Same product with a complex first argument.
Complex falling_factorial_complex(Complex z, int n, Scalar lambda);

/// Deformed frequency omega = log(1 + lambda*a) / lambda.
///
/// Evaluated through log1p, switching to the alternating series
/// a * (1 - u/2 + u^2/3 - ...) with u = lambda*a when |u| < 1e-4, so the
/// lambda -> 0 limit (omega -> a) is reached without cancellation.
Scalar omega(Scalar lambda, Scalar a);

/// Closed-form deformed exponential (1 + lambda*t)^(x/lambda) = exp(x * omega(lambda, t))
/// on the real branch 1 + lambda*t > 0. When x is an exact nonnegative integer
/// multiple of lambda the value is computed by binary exponentiation of
/// (1 + lambda*t), which is exact whenever the inputs are exactly representable.
Scalar degen_exp_closed(Scalar x, Scalar lambda, Scalar t);

/// Result of a truncated series evaluation of the deformed exponential.
struct SeriesEval {
  Scalar value = 0.0;
  Scalar last_term_magnitude = 0.0;  // magnitude of the final included term
  int terms_used = 0;
  bool terminated = false;       // a factor (x - n*lambda) hit exactly zero
  bool outside_radius = false;   // |lambda*t| >= 1 and the series did not terminate
};

/// Partial sum of sum_n falling_factorial(x, n, lambda) * t^n / n!.
///
/// Stops when a term is exactly zero (the series terminates), when
/// |term| <= 2^-53 * |partial sum|, or after max_terms terms.
SeriesEval degen_exp_series(Scalar x, Scalar lambda, Scalar t, int max_terms);

/// Deformed exponential with complex exponent on the real branch: exp(z * omega(lambda, t)).
Complex degen_exp_complex(Complex z, Scalar lambda, Scalar t);

/// Validated (lambda, a) evaluation environment. Immutable; carries the
/// derived frequency omega = log(1 + lambda*a)/lambda. Requires lambda != 0,
/// a != 0 and 1 + lambda*a > 0, all finite.
class DegenContext {
 public:
  DegenContext(Scalar lambda, Scalar a);

  Scalar lambda() const noexcept { return lambda_; }
  Scalar a() const noexcept { return a_; }
  Scalar omega() const noexcept { return omega_; }

 private:
  Scalar lambda_;
  Scalar a_;
  Scalar omega_;
};

}  // namespace degentrig
