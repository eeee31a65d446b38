#include "degentrig/identity_catalog.hpp"

#include <array>

#include "degentrig/errors.hpp"

namespace degentrig {

namespace {

constexpr double kRelTol = 1e-10;
constexpr double kLogSumAbsTol = 1e-9;
constexpr double kSlopeTol = 0.15;

constexpr std::array<IdentityInfo, 22> kCatalog{{
    {IdentityId::pythagorean, "pythagorean",
     "sinl(x)^2 + cosl(x)^2 = 1",
     ParamKind::none, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::double_angle_cos, "double_angle_cos",
     "cosl(2x) = 1 - 2 sinl(x)^2 = 2 cosl(x)^2 - 1",
     ParamKind::none, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::double_angle_sin, "double_angle_sin",
     "sinl(2x) = 2 sinl(x) cosl(x)",
     ParamKind::none, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::addition_sin, "addition_sin",
     "sinl(x±y) = sinl(x) cosl(y) ± cosl(x) sinl(y)",
     ParamKind::none, 2, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::addition_cos, "addition_cos",
     "cosl(x±y) = cosl(x) cosl(y) ∓ sinl(x) sinl(y)",
     ParamKind::none, 2, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::deriv_cos, "deriv_cos",
     "d/dx cosl(x) = -w sinl(x)",
     ParamKind::none, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::deriv_sin, "deriv_sin",
     "d/dx sinl(x) = w cosl(x)",
     ParamKind::none, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::cos_product, "cos_product",
     "prod_{j<2m} cosl(t + shift_j) = (-1)^m 2^(1-2m) sinl(2mt)",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::sin_product, "sin_product",
     "prod_{j<2m} sinl(t + shift_j) = 2^(1-2m) sinl(2mt)",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::log_abs_cos_sum, "log_abs_cos_sum",
     "log|2^(1-2m) sinl(2mt)| = sum_{j<2m} log|cosl(t + shift_j)|",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::absolute, kLogSumAbsTol},
    {IdentityId::log_abs_sin_sum, "log_abs_sin_sum",
     "log|2^(1-2m) sinl(2mt)| = sum_{j<2m} log|sinl(t + shift_j)|",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::absolute, kLogSumAbsTol},
    {IdentityId::tan_sum, "tan_sum",
     "-2m cotl(2mt) = sum_{j<2m} tanl(t + shift_j)",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::cot_sum, "cot_sum",
     "2m cotl(2mt) = sum_{j<2m} cotl(t + shift_j)",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::tan_shift_remark, "tan_shift_remark",
     "tanl(t + shift_j) = tan(t w + j pi/(2m))",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::triple_recurrence, "triple_recurrence",
     "cosl((k+1)x) + cosl((k-1)x) = 2 cosl(kx) cosl(x)",
     ParamKind::k, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::multi_angle_cos, "multi_angle_cos",
     "cosl(nx) = T_n(cosl(x))",
     ParamKind::n, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::sin_telescope, "sin_telescope",
     "sinl((2k+1)x) - sinl((2k-1)x) = 2 cosl(2kx) sinl(x)",
     ParamKind::k, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::cos2k_via_t, "cos2k_via_t",
     "cosl(2kx) = T_k(1 - 2 sinl(x)^2)",
     ParamKind::k, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::sin_odd_sum, "sin_odd_sum",
     "sinl((2m+1)x) = sinl(x) (1 + 2 sum_{k<=m} T_k(1 - 2 sinl(x)^2))",
     ParamKind::m, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::sin_odd_product, "sin_odd_product",
     "sinl((2m+1)x) = (2m+1) sinl(x) prod_{k<=m} (1 - sinl(x)^2 / sin^2(k pi/(2m+1)))",
     ParamKind::m, 1, Exactness::float_only, ResidualMode::relative, kRelTol},
    {IdentityId::hyperbolic_unit, "hyperbolic_unit",
     "coshl(x)^2 - sinhl(x)^2 = 1",
     ParamKind::none, 1, Exactness::exact_capable, ResidualMode::relative, kRelTol},
    {IdentityId::classical_limit, "classical_limit",
     "cosl(x) -> cos(ax), sinl(x) -> sin(ax) as lambda -> 0, error O(lambda)",
     ParamKind::none, 1, Exactness::float_only, ResidualMode::slope, kSlopeTol},
}};

}  // namespace

std::span<const IdentityInfo> identity_catalog() { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info;
  }
  throw ParamError("identity_info: unknown identity id");
}

std::string_view to_string(IdentityId id) { return identity_info(id).name; }

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

}  // namespace degentrig
