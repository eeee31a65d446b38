#include "degentrig/chebpoly.hpp"

#include <cmath>
#include <numbers>

namespace degentrig {

ChebCoeffs cheb_coeffs(int n) {
  if (n < 0) throw DomainError("cheb_coeffs: degree must be nonnegative");
  std::vector<BigInt> prev{1};      // T_0
  if (n == 0) return {0, prev};
  std::vector<BigInt> cur{0, 1};    // T_1
  for (int k = 1; k < n; ++k) {
    std::vector<BigInt> next(k + 2, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = 2 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

Scalar cheb_eval(int n, Scalar y) {
  if (n < 0) throw DomainError("cheb_eval: degree must be nonnegative");
  if (n == 0) return 1.0;
  Scalar tkm1 = 1.0;
  Scalar tk = y;
  for (int k = 1; k < n; ++k) {
    const Scalar tkp1 = 2.0 * y * tk - tkm1;
    tkm1 = tk;
    tk = tkp1;
  }
  return tk;
}

Scalar cheb_eval_coeffs(const ChebCoeffs& p, Scalar y) {
  // exact rational Horner over the integer coefficients, rounded once
  const boost::multiprecision::cpp_rational yy(y);
  boost::multiprecision::cpp_rational acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * yy + *it;
  }
  return acc.convert_to<Scalar>();
}

KmPoly km_build(int m) {
  if (m < 1) throw DomainError("km_build: m must be positive");
  KmPoly poly;
  poly.m = m;
  poly.leading_constant = static_cast<Scalar>(2 * m + 1);
  poly.zeros.reserve(m);
  for (int k = 1; k <= m; ++k) {
    const Scalar s = std::sin(static_cast<Scalar>(k) * std::numbers::pi /
                              static_cast<Scalar>(2 * m + 1));
    poly.zeros.push_back(s * s);
  }
  return poly;
}

Scalar km_eval(const KmPoly& poly, Scalar s) {
  Scalar acc = poly.leading_constant;
  for (const Scalar z : poly.zeros) acc *= 1.0 - s / z;
  return acc;
}

}  // namespace degentrig
