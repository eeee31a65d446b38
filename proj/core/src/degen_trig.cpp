#include "degentrig/degen_trig.hpp"

#include <cmath>

namespace degentrig {

Scalar cos_l(const DegenContext& ctx, Scalar x) { return std::cos(x * ctx.omega()); }

Scalar sin_l(const DegenContext& ctx, Scalar x) { return std::sin(x * ctx.omega()); }

Scalar tan_l(const DegenContext& ctx, Scalar x) {
  const Scalar den = cos_l(ctx, x);
  if (den == 0.0) throw PoleError("tan_l: cos_l is exactly zero");
  return sin_l(ctx, x) / den;
}

Scalar cot_l(const DegenContext& ctx, Scalar x) {
  const Scalar den = sin_l(ctx, x);
  if (den == 0.0) throw PoleError("cot_l: sin_l is exactly zero");
  return cos_l(ctx, x) / den;
}

Scalar cosh_l(const DegenContext& ctx, Scalar x) { return std::cosh(x * ctx.omega()); }

Scalar sinh_l(const DegenContext& ctx, Scalar x) { return std::sinh(x * ctx.omega()); }

Scalar tanh_l(const DegenContext& ctx, Scalar x) {
  const Scalar den = cosh_l(ctx, x);  // never zero on the reals
  return sinh_l(ctx, x) / den;
}

Scalar coth_l(const DegenContext& ctx, Scalar x) {
  const Scalar den = sinh_l(ctx, x);
  if (den == 0.0) throw PoleError("coth_l: sinh_l is exactly zero");
  return cosh_l(ctx, x) / den;
}

Scalar d_cos_l(const DegenContext& ctx, Scalar x) { return -ctx.omega() * sin_l(ctx, x); }

Scalar d_sin_l(const DegenContext& ctx, Scalar x) { return ctx.omega() * cos_l(ctx, x); }

}  // namespace degentrig
