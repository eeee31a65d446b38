#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "degentrig/degen_core.hpp"

namespace degentrig {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer coefficients of the degree-n polynomial T_n satisfying
/// T_{k+1}(y) = 2 y T_k(y) - T_{k-1}(y), T_0 = 1, T_1 = y.
/// coeffs[j] multiplies y^j; leading coefficient is 2^(n-1) for n >= 1.
struct ChebCoeffs {
  int degree = 0;
  std::vector<BigInt> coeffs;  // size degree + 1
};

ChebCoeffs cheb_coeffs(int n);

/// T_n(y) by the three-term recurrence (stable for |y| <= 1).
Scalar cheb_eval(int n, Scalar y);

/// Horner evaluation of the exact integer coefficients; cross-check path
/// for cheb_eval.
Scalar cheb_eval_coeffs(const ChebCoeffs& p, Scalar y);

/// Degree-m product polynomial with K_m(0) = 2m+1 and zeros sin^2(k pi / (2m+1)),
/// k = 1..m. Kept in product form; never expanded.
struct KmPoly {
  int m = 0;
  std::vector<Scalar> zeros;  // strictly increasing, all in (0, 1)
  Scalar leading_constant = 0.0;  // 2m + 1
};

KmPoly km_build(int m);

/// (2m+1) * prod_k (1 - s / zeros[k]).
Scalar km_eval(const KmPoly& poly, Scalar s);

}  // namespace degentrig
