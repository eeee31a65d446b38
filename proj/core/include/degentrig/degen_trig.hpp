#pragma once

#include "degentrig/degen_core.hpp"

namespace degentrig {

// The eight deformed trigonometric/hyperbolic functions. On the real branch
// every one of them is the classical function evaluated at x * ctx.omega();
// the complex-exponential definitions are recovered exactly by
// degen_exp_complex and are cross-checked in the test suite.

Scalar cos_l(const DegenContext& ctx, Scalar x);
Scalar sin_l(const DegenContext& ctx, Scalar x);

/// sin_l / cos_l. Throws PoleError when the denominator is exactly zero;
/// conditioning degrades near poles, which verification grids must avoid.
Scalar tan_l(const DegenContext& ctx, Scalar x);

/// cos_l / sin_l; pole at x = 0.
Scalar cot_l(const DegenContext& ctx, Scalar x);

Scalar cosh_l(const DegenContext& ctx, Scalar x);
Scalar sinh_l(const DegenContext& ctx, Scalar x);
Scalar tanh_l(const DegenContext& ctx, Scalar x);

/// cosh_l / sinh_l; pole at x = 0.
Scalar coth_l(const DegenContext& ctx, Scalar x);

/// Analytic derivatives d/dx cos_l = -omega * sin_l and d/dx sin_l = omega * cos_l.
Scalar d_cos_l(const DegenContext& ctx, Scalar x);
Scalar d_sin_l(const DegenContext& ctx, Scalar x);

}  // namespace degentrig
