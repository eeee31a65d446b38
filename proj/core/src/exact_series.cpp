#include "degentrig/exact_series.hpp"

#include <array>

namespace degentrig::exact {

namespace {

void require_same_order(const FormalSeries& a, const FormalSeries& b, const char* who) {
  if (a.order() != b.order()) {
    throw OrderMismatchError(std::string(who) + ": operand orders differ");
  }
}

const GaussianRational kOne{Rational(1)};
const GaussianRational kI{Rational(0), Rational(1)};

}  // namespace

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw NonInvertibleError("GaussianRational: division by zero");
  if (a.im == 0 && b.im == 0) return {a.re / b.re, Rational(0)};
  const Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

FormalSeries::FormalSeries(int order) {
  if (order < 0) throw DomainError("FormalSeries: order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, GaussianRational{});
}

FormalSeries FormalSeries::constant(const GaussianRational& c, int order) {
  FormalSeries f(order);
  f[0] = c;
  return f;
}

bool FormalSeries::is_zero() const { return !first_nonzero().has_value(); }

std::optional<int> FormalSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return std::nullopt;
}

FormalSeries series_add(const FormalSeries& lhs, const FormalSeries& rhs) {
  require_same_order(lhs, rhs, "series_add");
  FormalSeries out(lhs.order());
  for (int i = 0; i <= lhs.order(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

FormalSeries series_sub(const FormalSeries& lhs, const FormalSeries& rhs) {
  require_same_order(lhs, rhs, "series_sub");
  FormalSeries out(lhs.order());
  for (int i = 0; i <= lhs.order(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

FormalSeries series_mul(const FormalSeries& lhs, const FormalSeries& rhs) {
  require_same_order(lhs, rhs, "series_mul");
  const int order = lhs.order();
  FormalSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (lhs[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (rhs[j].is_zero()) continue;
      out[i + j] = out[i + j] + lhs[i] * rhs[j];
    }
  }
  return out;
}

FormalSeries series_scale(const GaussianRational& s, const FormalSeries& f) {
  FormalSeries out(f.order());
  for (int i = 0; i <= f.order(); ++i) out[i] = s * f[i];
  return out;
}

FormalSeries series_div(const FormalSeries& num, const FormalSeries& den) {
  require_same_order(num, den, "series_div");
  if (den[0].is_zero()) {
    throw NonInvertibleError("series_div: denominator has zero constant term");
  }
  const int order = num.order();
  FormalSeries out(order);
  for (int k = 0; k <= order; ++k) {
    GaussianRational acc = num[k];
    for (int j = 1; j <= k; ++j) acc = acc - den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

FormalSeries series_degen_exp(const GaussianRational& z, const Rational& lambda, int order) {
  if (lambda == 0) throw DomainError("series_degen_exp: lambda must be nonzero");
  FormalSeries out(order);
  GaussianRational coeff = kOne;  // (z)_{n,lambda} / n!
  out[0] = coeff;
  for (int n = 0; n < order; ++n) {
    const GaussianRational factor{z.re - Rational(n) * lambda, z.im};
    coeff = coeff * factor;
    coeff.re /= n + 1;
    coeff.im /= n + 1;
    out[n + 1] = coeff;
  }
  return out;
}

SinCosSeries series_sin_cos(const Rational& x, const Rational& lambda, int order) {
  const GaussianRational xi{Rational(0), x};
  const FormalSeries ep = series_degen_exp(xi, lambda, order);
  const FormalSeries em = series_degen_exp(-xi, lambda, order);
  const GaussianRational half{Rational(1, 2)};
  const GaussianRational half_over_i = half / kI;  // = -i/2
  SinCosSeries out{series_scale(half_over_i, series_sub(ep, em)),
                   series_scale(half, series_add(ep, em))};
  return out;
}

FormalSeries series_poly_apply(const ChebCoeffs& poly, const FormalSeries& f) {
  FormalSeries acc(f.order());
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
    acc = series_mul(acc, f);
    acc[0] = acc[0] + GaussianRational{Rational(*it)};
  }
  return acc;
}

double eval_real(const FormalSeries& f, double a0) {
  double acc = 0.0;
  for (int i = f.order(); i >= 0; --i) {
    if (f[i].im != 0) throw DomainError("eval_real: series has a complex coefficient");
    acc = acc * a0 + f[i].re.convert_to<double>();
  }
  return acc;
}

namespace {

int param_or_throw(const Params& params, const char* key) {
  const auto it = params.find(key);
  if (it == params.end() || it->second < 1) {
    throw ParamError(std::string("verify_exact: missing or invalid parameter '") + key +
                     "'");
  }
  return it->second;
}

// collects difference series; the verification passes iff all are identically zero
void exact_differences(IdentityId id, const Rational& x, const Rational& y,
                       const Rational& lambda, const Params& params, int order,
                       std::vector<FormalSeries>& diffs) {
  const auto sc = [&](const Rational& arg) { return series_sin_cos(arg, lambda, order); };
  const FormalSeries one = FormalSeries::constant(kOne, order);
  const GaussianRational two{Rational(2)};

  switch (id) {
    case IdentityId::pythagorean: {
      const auto [s, c] = sc(x);
      diffs.push_back(s * s + c * c - one);
      return;
    }
    case IdentityId::double_angle_cos: {
      const auto [s, c] = sc(x);
      const FormalSeries c2 = sc(x * 2).cos;
      diffs.push_back(c2 - (one - series_scale(two, s * s)));
      diffs.push_back(c2 - (series_scale(two, c * c) - one));
      return;
    }
    case IdentityId::double_angle_sin: {
      const auto [s, c] = sc(x);
      diffs.push_back(sc(x * 2).sin - series_scale(two, s * c));
      return;
    }
    case IdentityId::addition_sin: {
      const auto [sx, cx] = sc(x);
      const auto [sy, cy] = sc(y);
      diffs.push_back(sc(x + y).sin - (sx * cy + cx * sy));
      diffs.push_back(sc(x - y).sin - (sx * cy - cx * sy));
      return;
    }
    case IdentityId::addition_cos: {
      const auto [sx, cx] = sc(x);
      const auto [sy, cy] = sc(y);
      diffs.push_back(sc(x + y).cos - (cx * cy - sx * sy));
      diffs.push_back(sc(x - y).cos - (cx * cy + sx * sy));
      return;
    }
    case IdentityId::triple_recurrence: {
      const int k = param_or_throw(params, "k");
      const FormalSeries lhs = sc(x * (k + 1)).cos + sc(x * (k - 1)).cos;
      diffs.push_back(lhs - series_scale(two, sc(x * k).cos * sc(x).cos));
      return;
    }
    case IdentityId::multi_angle_cos: {
      const int n = param_or_throw(params, "n");
      diffs.push_back(sc(x * n).cos - series_poly_apply(cheb_coeffs(n), sc(x).cos));
      return;
    }
    case IdentityId::sin_telescope: {
      const int k = param_or_throw(params, "k");
      const FormalSeries lhs = sc(x * (2 * k + 1)).sin - sc(x * (2 * k - 1)).sin;
      diffs.push_back(lhs - series_scale(two, sc(x * (2 * k)).cos * sc(x).sin));
      return;
    }
    case IdentityId::cos2k_via_t: {
      const int k = param_or_throw(params, "k");
      const auto [s, c] = sc(x);
      const FormalSeries arg = one - series_scale(two, s * s);
      diffs.push_back(sc(x * (2 * k)).cos - series_poly_apply(cheb_coeffs(k), arg));
      return;
    }
    case IdentityId::sin_odd_sum: {
      const int m = param_or_throw(params, "m");
      const auto [s, c] = sc(x);
      const FormalSeries arg = one - series_scale(two, s * s);
      FormalSeries sum = one;
      for (int k = 1; k <= m; ++k) {
        sum = sum + series_scale(two, series_poly_apply(cheb_coeffs(k), arg));
      }
      diffs.push_back(sc(x * (2 * m + 1)).sin - s * sum);
      return;
    }
    case IdentityId::hyperbolic_unit: {
      const GaussianRational zx{x};
      const FormalSeries ep = series_degen_exp(zx, lambda, order);
      const FormalSeries em = series_degen_exp(-zx, lambda, order);
      const GaussianRational half{Rational(1, 2)};
      const FormalSeries ch = series_scale(half, ep + em);
      const FormalSeries sh = series_scale(half, ep - em);
      diffs.push_back(ch * ch - sh * sh - one);
      return;
    }
    default:
      throw NotExactCapableError(
          std::string("verify_exact: '") + std::string(to_string(id)) +
          "' depends on pi-valued shifts or limits and is float-checked only");
  }
}

}  // namespace

ExactVerification verify_exact(IdentityId id, const Rational& x, const Rational& y,
                               const Rational& lambda, const Params& params, int order) {
  if (lambda == 0) throw DomainError("verify_exact: lambda must be nonzero");
  if (order < 0) throw DomainError("verify_exact: order must be nonnegative");
  std::vector<FormalSeries> diffs;
  exact_differences(id, x, y, lambda, params, order, diffs);
  ExactVerification out;
  out.pass = true;
  for (const FormalSeries& d : diffs) {
    if (const auto idx = d.first_nonzero()) {
      out.pass = false;
      if (!out.first_failing_coefficient || *idx < *out.first_failing_coefficient) {
        out.first_failing_coefficient = *idx;
      }
    }
  }
  return out;
}

std::span<const RationalTriple> default_triples() {
  static const std::array<RationalTriple, 6> kTriples{{
      {Rational(1), Rational(1, 2), Rational(1)},
      {Rational(2, 3), Rational(1, 5), Rational(-1, 2)},
      {Rational(1, 3), Rational(2, 7), Rational(1, 3)},
      {Rational(3, 2), Rational(1, 3), Rational(-2, 3)},
      {Rational(5, 4), Rational(1, 2), Rational(1, 4)},
      {Rational(7, 5), Rational(2, 3), Rational(2)},
  }};
  return kTriples;
}

}  // namespace degentrig::exact
