#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace degentrig {

/// Every checkable identity of the function family. Notation in the formula
/// strings: cosl/sinl/... are the deformed functions at a context (lambda, a),
/// w is the context frequency omega, and shift_j = j*pi/(2m*w).
enum class IdentityId {
  pythagorean,
  double_angle_cos,
  double_angle_sin,
  addition_sin,
  addition_cos,
  deriv_cos,
  deriv_sin,
  cos_product,
  sin_product,
  log_abs_cos_sum,
  log_abs_sin_sum,
  tan_sum,
  cot_sum,
  tan_shift_remark,
  triple_recurrence,
  multi_angle_cos,
  sin_telescope,
  cos2k_via_t,
  sin_odd_sum,
  sin_odd_product,
  hyperbolic_unit,
  classical_limit,
};

/// Integer parameter the identity is indexed by, if any.
enum class ParamKind { none, m, n, k };

enum class Exactness { float_only, exact_capable };

/// How a report's pass flag is decided: against the normalized residual
/// |L-R| / max(|L|,|R|,1), against the raw absolute residual, or against
/// |fitted slope - 1| for the limit sweep.
enum class ResidualMode { relative, absolute, slope };

struct IdentityInfo {
  IdentityId id;
  std::string_view name;     // stable serialization token
  std::string_view formula;  // statement of the identity
  ParamKind param;
  int arity;                 // free real variables drawn from the grid
  Exactness exactness;
  ResidualMode residual_mode;
  double pinned_tolerance;   // used for absolute/slope modes; relative mode
                             // takes the run-wide tolerance
};

std::span<const IdentityInfo> identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

}  // namespace degentrig
