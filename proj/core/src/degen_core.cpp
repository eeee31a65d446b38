#include "degentrig/degen_core.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace degentrig {

namespace {

bool finite(Scalar v) { return std::isfinite(v); }

void require_branch(Scalar lambda, Scalar t, const char* who) {
  if (!finite(lambda) || !finite(t)) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
  if (lambda == 0.0) {
    throw DomainError(std::string(who) + ": lambda must be nonzero");
  }
  if (1.0 + lambda * t <= 0.0) {
    throw DomainError(std::string(who) + ": 1 + lambda*t must be positive");
  }
}

// (1 + b)^k by binary exponentiation; exact when every intermediate product
// is exactly representable (dyadic inputs with short mantissas).
Scalar ipow1p(Scalar base, std::int64_t k) {
  Scalar acc = 1.0;
  Scalar p = base;
  while (k > 0) {
    if (k & 1) acc *= p;
    k >>= 1;
    if (k) p *= p;
  }
  return acc;
}

}  // namespace

Scalar falling_factorial(Scalar x, int n, Scalar lambda) {
  if (n < 0) throw DomainError("falling_factorial: n must be nonnegative");
  Scalar prod = 1.0;
  for (int j = 0; j < n; ++j) {
    prod *= x - static_cast<Scalar>(j) * lambda;
  }
  return prod;
}

Complex falling_factorial_complex(Complex z, int n, Scalar lambda) {
  if (n < 0) throw DomainError("falling_factorial_complex: n must be nonnegative");
  Complex prod = 1.0;
  for (int j = 0; j < n; ++j) {
    prod *= z - Complex(static_cast<Scalar>(j) * lambda, 0.0);
  }
  return prod;
}

Scalar omega(Scalar lambda, Scalar a) {
  require_branch(lambda, a, "omega");
  const Scalar u = lambda * a;
  if (std::abs(u) < 1e-4) {
    // omega = a * (1 - u/2 + u^2/3 - ...); five terms reach 2^-53 at |u| < 1e-4
    Scalar acc = 0.0;
    Scalar pw = 1.0;  // (-u)^j
    for (int j = 0; j < 64; ++j) {
      const Scalar term = pw / static_cast<Scalar>(j + 1);
      acc += term;
      if (std::abs(term) <= std::abs(acc) * 0x1p-53) break;
      pw *= -u;
    }
    return a * acc;
  }
  return std::log1p(u) / lambda;
}

Scalar degen_exp_closed(Scalar x, Scalar lambda, Scalar t) {
  require_branch(lambda, t, "degen_exp_closed");
  if (!finite(x)) throw DomainError("degen_exp_closed: non-finite x");
  // Terminating exponents: x = k*lambda with integer k >= 0 gives the
  // binomial value (1 + lambda*t)^k.
  const Scalar q = x / lambda;
  if (q >= 0.0 && q <= 1024.0 && q == std::floor(q)) {
    const auto k = static_cast<std::int64_t>(q);
    if (static_cast<Scalar>(k) * lambda == x) {
      return ipow1p(1.0 + lambda * t, k);
    }
  }
  return std::exp(x * omega(lambda, t));
}

SeriesEval degen_exp_series(Scalar x, Scalar lambda, Scalar t, int max_terms) {
  if (max_terms < 1) throw DomainError("degen_exp_series: max_terms must be >= 1");
  if (!finite(x) || !finite(lambda) || !finite(t)) {
    throw DomainError("degen_exp_series: non-finite argument");
  }
  SeriesEval out;
  Scalar term = 1.0;  // falling_factorial(x, n, lambda) * t^n / n!
  Scalar sum = 0.0;
  int n = 0;
  for (; n < max_terms; ++n) {
    sum += term;
    out.last_term_magnitude = std::abs(term);
    const Scalar next = term * (x - static_cast<Scalar>(n) * lambda) * t /
                        static_cast<Scalar>(n + 1);
    if (next == 0.0) {
      out.terminated = true;
      ++n;
      break;
    }
    if (std::abs(next) <= std::abs(sum) * 0x1p-53) {
      ++n;
      break;
    }
    term = next;
  }
  out.value = sum;
  out.terms_used = n;
  out.outside_radius = !out.terminated && std::abs(lambda * t) >= 1.0;
  return out;
}

Complex degen_exp_complex(Complex z, Scalar lambda, Scalar t) {
  require_branch(lambda, t, "degen_exp_complex");
  return std::exp(z * omega(lambda, t));
}

DegenContext::DegenContext(Scalar lambda, Scalar a) : lambda_(lambda), a_(a) {
  if (!finite(lambda) || !finite(a)) {
    throw DomainError("DegenContext: non-finite parameter");
  }
  if (a == 0.0) throw DomainError("DegenContext: a must be nonzero");
  omega_ = degentrig::omega(lambda, a);  // validates lambda != 0 and the branch
  if (!finite(omega_) || omega_ == 0.0) {
    throw DomainError("DegenContext: omega not finite and nonzero");
  }
}

}  // namespace degentrig
