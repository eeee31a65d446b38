#pragma once

#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "degentrig/chebpoly.hpp"
#include "degentrig/identity_catalog.hpp"
#include "degentrig/identity_suite.hpp"

namespace degentrig::exact {

/// Exact rational scalar; always canonical (positive denominator, reduced).
using Rational = boost::multiprecision::cpp_rational;

/// re + i*im with exact rational parts. Multiplication short-circuits to a
/// single rational product when both imaginary parts vanish, which is the
/// common case once sine/cosine series have been formed.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im == 0 && b.im == 0) return {a.re * b.re, Rational(0)};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

GaussianRational conj(const GaussianRational& z);

/// Truncated power series in the formal variable a, coefficients 0..order.
/// All arithmetic is exact; products are truncated at the common order.
class FormalSeries {
 public:
  explicit FormalSeries(int order);
  static FormalSeries constant(const GaussianRational& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const GaussianRational& operator[](int i) const { return coeffs_[i]; }
  GaussianRational& operator[](int i) { return coeffs_[i]; }

  bool is_zero() const;
  /// Index of the lowest nonzero coefficient, if any.
  std::optional<int> first_nonzero() const;

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) = default;

 private:
  std::vector<GaussianRational> coeffs_;
};

FormalSeries series_add(const FormalSeries& lhs, const FormalSeries& rhs);
FormalSeries series_sub(const FormalSeries& lhs, const FormalSeries& rhs);
FormalSeries series_mul(const FormalSeries& lhs, const FormalSeries& rhs);
FormalSeries series_scale(const GaussianRational& s, const FormalSeries& f);
/// Exact long division; the denominator must have a nonzero constant term.
FormalSeries series_div(const FormalSeries& num, const FormalSeries& den);

inline FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return series_add(a, b); }
inline FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return series_sub(a, b); }
inline FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return series_mul(a, b); }

/// Series of the deformed exponential with exponent z: coefficient n is the
/// generalized falling factorial (z)(z-lambda)...(z-(n-1)lambda) / n!.
FormalSeries series_degen_exp(const GaussianRational& z, const Rational& lambda, int order);

struct SinCosSeries {
  FormalSeries sin;
  FormalSeries cos;
};

/// Deformed sine/cosine series formed from the two complex exponentials;
/// both results have exactly-zero imaginary parts.
SinCosSeries series_sin_cos(const Rational& x, const Rational& lambda, int order);

/// Exact Horner application of an integer polynomial to a series.
FormalSeries series_poly_apply(const ChebCoeffs& poly, const FormalSeries& f);

/// Horner evaluation of a real series at a double point (cross-checks against
/// the floating-point function path). Requires all-real coefficients.
double eval_real(const FormalSeries& f, double a0);

struct ExactVerification {
  bool pass = false;
  std::optional<int> first_failing_coefficient;
};

/// Forms LHS - RHS of an exact-capable identity in the series ring and
/// requires every coefficient through `order` to vanish identically.
/// Throws NotExactCapableError for pi-dependent identities.
ExactVerification verify_exact(IdentityId id, const Rational& x, const Rational& y,
                               const Rational& lambda, const Params& params, int order);

struct RationalTriple {
  Rational x;
  Rational y;
  Rational lambda;
};

/// Fixed (x, y, lambda) instances used by the exact certification runs;
/// includes negative lambda.
std::span<const RationalTriple> default_triples();

}  // namespace degentrig::exact
