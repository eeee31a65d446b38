#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degentrig/degen_trig.hpp"
#include "degentrig/identity_catalog.hpp"

namespace degentrig {

using Params = std::map<std::string, int>;

/// Deterministic sample source: a low-discrepancy stream of canonical points
/// in (0,1), mapped per context into one frequency period x in (-pi/w, pi/w).
/// Candidate points whose identity-specific denominators (or log arguments)
/// fall below pole_margin are rejected at run time.
struct SampleGrid {
  std::vector<DegenContext> contexts;
  std::vector<double> x_points;  // canonical stream, values in (0,1)
  double pole_margin = 1e-3;
  std::uint64_t seed = 1;

  static SampleGrid make(std::vector<DegenContext> contexts, std::uint64_t seed,
                         int points_per_context = 64, double pole_margin = 1e-3);
  static SampleGrid make_default(std::uint64_t seed, int points_per_context = 64,
                                 double pole_margin = 1e-3);

  /// Primary free variable for candidate i under a context.
  double x_for(const DegenContext& ctx, std::size_t i) const;
  /// Second free variable (two-parameter identities), an independent
  /// van der Corput stream over the same period.
  double y_for(const DegenContext& ctx, std::size_t i) const;
};

/// Context table used by default grids and the verification CLI:
/// lambda in {+-0.5, +-0.1, 1, 2} x a in {0.3, 1, e-1, 2.5}, restricted to
/// the real branch 1 + lambda*a > 0.
std::vector<DegenContext> default_contexts();

struct WorstPoint {
  double lambda = 0.0;
  double a = 0.0;
  double omega = 0.0;
  double x = 0.0;
};

struct IdentityReport {
  IdentityId id = IdentityId::pythagorean;
  Params params;
  long n_samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  WorstPoint worst;
  std::string error;  // nonempty when the check aborted instead of running
};

/// Wire formats consumed by the CLI: one JSON object per report (single line)
/// and one CSV row per report with the fixed column set below.
std::string report_json_line(const IdentityReport& r);
std::string report_csv_header();
std::string report_csv_row(const IdentityReport& r);

/// Evaluates both sides of one identity over every admissible grid point and
/// aggregates residuals. Residual normalization: |L-R| / max(|L|,|R|,1).
IdentityReport run_identity(IdentityId id, const Params& params,
                            const SampleGrid& grid, double rel_tolerance = 1e-10);

/// Runs the whole catalog: parameter-free identities once, m-indexed ones for
/// m = 1..max_m, n/k-indexed ones for 1..max_n. Per-identity errors are
/// captured as failed reports; the sweep never aborts.
std::vector<IdentityReport> run_all(const SampleGrid& grid, int max_m, int max_n,
                                    double rel_tolerance = 1e-10);

/// True when every denominator / log argument this identity needs at (x, y)
/// stays at or above `margin` in magnitude.
bool admissible_point(IdentityId id, const Params& params, const DegenContext& ctx,
                      double x, double y, double margin);

/// Custom check entry used for harness self-tests (deliberately mutated
/// identities must be detected). The evaluator appends (lhs, rhs) pairs for
/// one sample point.
struct PointCheck {
  int arity = 1;
  std::function<void(const DegenContext&, double x, double y, const Params&,
                     std::vector<std::array<double, 2>>&)>
      eval;
  std::function<bool(const DegenContext&, double x, double y, const Params&,
                     double margin)>
      admissible;  // optional; accepts everything when empty
};

IdentityReport run_point_check(const PointCheck& check, IdentityId label,
                               const Params& params, const SampleGrid& grid,
                               double tolerance,
                               ResidualMode mode = ResidualMode::relative);

/// lambda -> 0 convergence data: errors[i] = |cosl(x) - cos(ax)| + |sinl(x) - sin(ax)|
/// at lambda = lambdas[i], and the least-squares slope of log error vs log
/// lambda. slope is empty when any error vanishes (degenerate fit, e.g. x = 0).
struct SweepResult {
  std::vector<double> lambdas;
  std::vector<double> errors;
  std::optional<double> slope;
};

SweepResult classical_limit_sweep(double x, double a, std::span<const double> lambdas);

/// 2^-3, 2^-4, ..., 2^-15.
std::vector<double> default_sweep_lambdas();

/// Convergence-order probe for the derivative identities: plain central
/// differences of cosl/sinl over the step grid h, fitted per sample point as
/// the slope of log error vs log h (analytic value as reference). Points are
/// drawn from the seed stream, keeping both |sinl| and |cosl| >= 0.4 so the
/// truncation term never degenerates.
struct DerivOrderResult {
  std::vector<double> cos_slopes;
  std::vector<double> sin_slopes;
};

DerivOrderResult derivative_order_check(const DegenContext& ctx, int n_points,
                                        std::span<const double> h_values,
                                        std::uint64_t seed);

/// Constant-factor audit for the product identities: evaluates the complex
/// prefactor -(i/2^(2m-1)) e^(-i m pi) e^(i pi/2) and its sign-adjusted twin
/// directly in complex arithmetic against the real constants (-1)^m 2^(1-2m)
/// and 2^(1-2m).
struct PrefactorCheck {
  std::complex<double> raw_cos;
  std::complex<double> raw_sin;
  double expected_cos = 0.0;
  double expected_sin = 0.0;
  double rel_err_cos = 0.0;
  double rel_err_sin = 0.0;
};

PrefactorCheck product_prefactor_check(int m);

}  // namespace degentrig
