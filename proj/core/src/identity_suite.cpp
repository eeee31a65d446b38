#include "degentrig/identity_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "degentrig/chebpoly.hpp"

namespace degentrig {

namespace {

constexpr double kPi = std::numbers::pi;

// -------------------------------------------------------------------------
// deterministic point streams

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_from_bits(std::uint64_t v) { return static_cast<double>(v >> 11) * 0x1p-53; }

double frac(double v) { return v - std::floor(v); }

// golden-ratio Weyl stream
double weyl_point(double offset, std::size_t i) {
  constexpr double kGolden = 0.6180339887498948482;
  return frac(offset + static_cast<double>(i + 1) * kGolden);
}

// radical inverse base 2
double vdc2(std::uint64_t i) {
  double r = 0.0;
  double f = 0.5;
  while (i) {
    if (i & 1) r += f;
    f *= 0.5;
    i >>= 1;
  }
  return r;
}

double first_offset(std::uint64_t seed) {
  std::uint64_t s = seed;
  return unit_from_bits(splitmix64(s));
}

double second_offset(std::uint64_t seed) {
  std::uint64_t s = seed;
  splitmix64(s);
  return unit_from_bits(splitmix64(s));
}

// -------------------------------------------------------------------------
// high-accuracy angle evaluation for the derivative checks
//
// cos(x*w) with the product rounding compensated through fma; keeps the
// function-value error near half an ulp so the Richardson quotient stays
// well under the report tolerance.

double corrected_cos(double x, double w) {
  const double p = x * w;
  const double e = std::fma(x, w, -p);
  return std::cos(p) - std::sin(p) * e;
}

double corrected_sin(double x, double w) {
  const double p = x * w;
  const double e = std::fma(x, w, -p);
  return std::sin(p) + std::cos(p) * e;
}

template <class F>
double central_diff(const F& f, double x, double h) {
  const double xp = x + h;
  const double xm = x - h;
  return (f(xp) - f(xm)) / (xp - xm);
}

template <class F>
double richardson_diff(const F& f, double x, double h) {
  const double coarse = central_diff(f, x, h);
  const double fine = central_diff(f, x, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

constexpr double kDerivStep = 1e-5;

// -------------------------------------------------------------------------
// identity evaluators

double shift_step(const DegenContext& ctx, int m) {
  return kPi / (2.0 * static_cast<double>(m) * ctx.omega());
}

int require_param(const Params& params, const char* key) {
  const auto it = params.find(key);
  if (it == params.end() || it->second < 1) {
    throw ParamError(std::string("run_identity: missing or invalid parameter '") +
                     key + "'");
  }
  return it->second;
}

using PairList = std::vector<std::array<double, 2>>;

void eval_identity(IdentityId id, const Params& params, const DegenContext& ctx,
                   double x, double y, PairList& out) {
  switch (id) {
    case IdentityId::pythagorean: {
      const double s = sin_l(ctx, x);
      const double c = cos_l(ctx, x);
      out.push_back({s * s + c * c, 1.0});
      return;
    }
    case IdentityId::double_angle_cos: {
      const double s = sin_l(ctx, x);
      const double c = cos_l(ctx, x);
      const double c2 = cos_l(ctx, 2.0 * x);
      out.push_back({c2, 1.0 - 2.0 * s * s});
      out.push_back({c2, 2.0 * c * c - 1.0});
      return;
    }
    case IdentityId::double_angle_sin: {
      out.push_back({sin_l(ctx, 2.0 * x), 2.0 * sin_l(ctx, x) * cos_l(ctx, x)});
      return;
    }
    case IdentityId::addition_sin: {
      const double sx = sin_l(ctx, x), cx = cos_l(ctx, x);
      const double sy = sin_l(ctx, y), cy = cos_l(ctx, y);
      out.push_back({sin_l(ctx, x + y), sx * cy + cx * sy});
      out.push_back({sin_l(ctx, x - y), sx * cy - cx * sy});
      return;
    }
    case IdentityId::addition_cos: {
      const double sx = sin_l(ctx, x), cx = cos_l(ctx, x);
      const double sy = sin_l(ctx, y), cy = cos_l(ctx, y);
      out.push_back({cos_l(ctx, x + y), cx * cy - sx * sy});
      out.push_back({cos_l(ctx, x - y), cx * cy + sx * sy});
      return;
    }
    case IdentityId::deriv_cos: {
      const double w = ctx.omega();
      const auto f = [w](double t) { return corrected_cos(t, w); };
      out.push_back({richardson_diff(f, x, kDerivStep), d_cos_l(ctx, x)});
      return;
    }
    case IdentityId::deriv_sin: {
      const double w = ctx.omega();
      const auto f = [w](double t) { return corrected_sin(t, w); };
      out.push_back({richardson_diff(f, x, kDerivStep), d_sin_l(ctx, x)});
      return;
    }
    case IdentityId::cos_product: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      double prod = 1.0;
      for (int j = 0; j < 2 * m; ++j) prod *= cos_l(ctx, x + j * step);
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      out.push_back({prod, sign * std::ldexp(sin_l(ctx, 2.0 * m * x), 1 - 2 * m)});
      return;
    }
    case IdentityId::sin_product: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      double prod = 1.0;
      for (int j = 0; j < 2 * m; ++j) prod *= sin_l(ctx, x + j * step);
      out.push_back({prod, std::ldexp(sin_l(ctx, 2.0 * m * x), 1 - 2 * m)});
      return;
    }
    case IdentityId::log_abs_cos_sum: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      double sum = 0.0;
      for (int j = 0; j < 2 * m; ++j) sum += std::log(std::abs(cos_l(ctx, x + j * step)));
      const double lhs =
          std::log(std::abs(std::ldexp(sin_l(ctx, 2.0 * m * x), 1 - 2 * m)));
      out.push_back({lhs, sum});
      return;
    }
    case IdentityId::log_abs_sin_sum: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      double sum = 0.0;
      for (int j = 0; j < 2 * m; ++j) sum += std::log(std::abs(sin_l(ctx, x + j * step)));
      const double lhs =
          std::log(std::abs(std::ldexp(sin_l(ctx, 2.0 * m * x), 1 - 2 * m)));
      out.push_back({lhs, sum});
      return;
    }
    case IdentityId::tan_sum: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      double sum = 0.0;
      for (int j = 0; j < 2 * m; ++j) sum += tan_l(ctx, x + j * step);
      out.push_back({-2.0 * m * cot_l(ctx, 2.0 * m * x), sum});
      return;
    }
    case IdentityId::cot_sum: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      double sum = 0.0;
      for (int j = 0; j < 2 * m; ++j) sum += cot_l(ctx, x + j * step);
      out.push_back({2.0 * m * cot_l(ctx, 2.0 * m * x), sum});
      return;
    }
    case IdentityId::tan_shift_remark: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      const double w = ctx.omega();
      for (int j = 0; j < 2 * m; ++j) {
        out.push_back({tan_l(ctx, x + j * step),
                       std::tan(x * w + j * kPi / (2.0 * m))});
      }
      return;
    }
    case IdentityId::triple_recurrence: {
      const int k = require_param(params, "k");
      out.push_back({cos_l(ctx, (k + 1.0) * x) + cos_l(ctx, (k - 1.0) * x),
                     2.0 * cos_l(ctx, static_cast<double>(k) * x) * cos_l(ctx, x)});
      return;
    }
    case IdentityId::multi_angle_cos: {
      const int n = require_param(params, "n");
      out.push_back({cos_l(ctx, static_cast<double>(n) * x),
                     cheb_eval(n, cos_l(ctx, x))});
      return;
    }
    case IdentityId::sin_telescope: {
      const int k = require_param(params, "k");
      out.push_back({sin_l(ctx, (2.0 * k + 1.0) * x) - sin_l(ctx, (2.0 * k - 1.0) * x),
                     2.0 * cos_l(ctx, 2.0 * k * x) * sin_l(ctx, x)});
      return;
    }
    case IdentityId::cos2k_via_t: {
      const int k = require_param(params, "k");
      const double s = sin_l(ctx, x);
      out.push_back({cos_l(ctx, 2.0 * k * x), cheb_eval(k, 1.0 - 2.0 * s * s)});
      return;
    }
    case IdentityId::sin_odd_sum: {
      const int m = require_param(params, "m");
      const double s = sin_l(ctx, x);
      const double u = 1.0 - 2.0 * s * s;
      double sum = 1.0;
      for (int k = 1; k <= m; ++k) sum += 2.0 * cheb_eval(k, u);
      out.push_back({sin_l(ctx, (2.0 * m + 1.0) * x), s * sum});
      return;
    }
    case IdentityId::sin_odd_product: {
      const int m = require_param(params, "m");
      const double s = sin_l(ctx, x);
      const KmPoly km = km_build(m);
      out.push_back({sin_l(ctx, (2.0 * m + 1.0) * x), s * km_eval(km, s * s)});
      return;
    }
    case IdentityId::hyperbolic_unit: {
      const double ch = cosh_l(ctx, x);
      const double sh = sinh_l(ctx, x);
      out.push_back({ch * ch - sh * sh, 1.0});
      return;
    }
    case IdentityId::classical_limit:
      throw ParamError("eval_identity: classical_limit is sweep-based");
  }
  throw ParamError("eval_identity: unknown identity id");
}

bool margins_ok(IdentityId id, const Params& params, const DegenContext& ctx,
                double x, double margin) {
  const double w = ctx.omega();
  switch (id) {
    case IdentityId::tan_sum:
    case IdentityId::log_abs_cos_sum: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      if (std::abs(std::sin(2.0 * m * x * w)) < margin) return false;
      for (int j = 0; j < 2 * m; ++j) {
        if (std::abs(std::cos((x + j * step) * w)) < margin) return false;
      }
      return true;
    }
    case IdentityId::cot_sum:
    case IdentityId::log_abs_sin_sum: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      if (std::abs(std::sin(2.0 * m * x * w)) < margin) return false;
      for (int j = 0; j < 2 * m; ++j) {
        if (std::abs(std::sin((x + j * step) * w)) < margin) return false;
      }
      return true;
    }
    case IdentityId::tan_shift_remark: {
      const int m = require_param(params, "m");
      const double step = shift_step(ctx, m);
      for (int j = 0; j < 2 * m; ++j) {
        if (std::abs(std::cos((x + j * step) * w)) < margin) return false;
      }
      return true;
    }
    default:
      return true;
  }
}

// -------------------------------------------------------------------------
// shared runner

double sane(double v) { return std::isfinite(v) ? v : std::numeric_limits<double>::infinity(); }

IdentityReport run_generic(IdentityId label, const Params& params, const SampleGrid& grid,
                           int arity,
                           const std::function<void(const DegenContext&, double, double,
                                                    const Params&, PairList&)>& eval,
                           const std::function<bool(const DegenContext&, double, double,
                                                    const Params&, double)>& admissible,
                           double tolerance, ResidualMode mode) {
  IdentityReport report;
  report.id = label;
  report.params = params;
  report.tolerance = tolerance;

  PairList pairs;
  double worst_metric = -1.0;
  for (const DegenContext& ctx : grid.contexts) {
    for (std::size_t i = 0; i < grid.x_points.size(); ++i) {
      const double x = grid.x_for(ctx, i);
      const double y = arity >= 2 ? grid.y_for(ctx, i) : 0.0;
      if (admissible && !admissible(ctx, x, y, params, grid.pole_margin)) continue;
      pairs.clear();
      eval(ctx, x, y, params, pairs);
      ++report.n_samples;
      for (const auto& [lhs, rhs] : pairs) {
        const double abs_r = sane(std::abs(lhs - rhs));
        const double rel_r = abs_r / std::max({std::abs(lhs), std::abs(rhs), 1.0});
        report.max_abs_residual = std::max(report.max_abs_residual, abs_r);
        report.max_rel_residual = std::max(report.max_rel_residual, rel_r);
        const double metric = mode == ResidualMode::absolute ? abs_r : rel_r;
        if (metric > worst_metric) {
          worst_metric = metric;
          report.worst = {ctx.lambda(), ctx.a(), ctx.omega(), x};
        }
      }
    }
  }
  if (report.n_samples == 0) {
    throw EmptyGridError("run_identity: pole filtering removed all sample points");
  }
  report.pass = (mode == ResidualMode::absolute)
                    ? report.max_abs_residual <= tolerance
                    : report.max_rel_residual <= tolerance;
  return report;
}

double fit_slope(std::span<const double> logx, std::span<const double> logy) {
  const auto n = static_cast<double>(logx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < logx.size(); ++i) {
    sx += logx[i];
    sy += logy[i];
    sxx += logx[i] * logx[i];
    sxy += logx[i] * logy[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

IdentityReport classical_limit_report(const SampleGrid& grid, double tolerance) {
  IdentityReport report;
  report.id = IdentityId::classical_limit;
  report.tolerance = tolerance;

  std::vector<double> as;
  for (const DegenContext& ctx : grid.contexts) {
    if (std::find(as.begin(), as.end(), ctx.a()) == as.end()) as.push_back(ctx.a());
  }
  const auto lambdas = default_sweep_lambdas();
  for (const double a : as) {
    const SweepResult sw = classical_limit_sweep(1.0, a, lambdas);
    report.n_samples += static_cast<long>(sw.errors.size());
    if (!sw.slope) {
      report.pass = false;
      report.error = "degenerate slope fit";
      return report;
    }
    const double dev = std::abs(*sw.slope - 1.0);
    report.max_abs_residual = std::max(report.max_abs_residual, dev);
    report.max_rel_residual = std::max(report.max_rel_residual, dev);
    if (dev == report.max_rel_residual) {
      report.worst = {lambdas.back(), a, omega(lambdas.back(), a), 1.0};
    }
  }
  report.pass = report.max_rel_residual <= tolerance;
  return report;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

std::string param_cell(const Params& params, const char* key) {
  const auto it = params.find(key);
  return it == params.end() ? std::string() : std::to_string(it->second);
}

}  // namespace

// ---------------------------------------------------------------------------
// SampleGrid

SampleGrid SampleGrid::make(std::vector<DegenContext> contexts, std::uint64_t seed,
                            int points_per_context, double pole_margin) {
  if (contexts.empty()) throw DomainError("SampleGrid: no contexts");
  if (points_per_context < 1) throw DomainError("SampleGrid: need at least one point");
  SampleGrid grid;
  grid.contexts = std::move(contexts);
  grid.seed = seed;
  grid.pole_margin = pole_margin;
  const double offset = first_offset(seed);
  grid.x_points.reserve(points_per_context);
  for (int i = 0; i < points_per_context; ++i) {
    grid.x_points.push_back(weyl_point(offset, static_cast<std::size_t>(i)));
  }
  return grid;
}

SampleGrid SampleGrid::make_default(std::uint64_t seed, int points_per_context,
                                    double pole_margin) {
  return make(default_contexts(), seed, points_per_context, pole_margin);
}

double SampleGrid::x_for(const DegenContext& ctx, std::size_t i) const {
  const double half_period = kPi / std::abs(ctx.omega());
  return (2.0 * x_points[i] - 1.0) * half_period;
}

double SampleGrid::y_for(const DegenContext& ctx, std::size_t i) const {
  const double half_period = kPi / std::abs(ctx.omega());
  const double v = frac(vdc2(i + 1) + second_offset(seed));
  return (2.0 * v - 1.0) * half_period;
}

std::vector<DegenContext> default_contexts() {
  const double kEm1 = std::exp(1.0) - 1.0;
  const double lambdas[] = {0.5, -0.5, 0.1, -0.1, 1.0, 2.0};
  const double as[] = {0.3, 1.0, kEm1, 2.5};
  std::vector<DegenContext> out;
  for (const double lambda : lambdas) {
    for (const double a : as) {
      if (1.0 + lambda * a > 0.0) out.emplace_back(lambda, a);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// report serialization

std::string report_json_line(const IdentityReport& r) {
  std::string params = "{";
  bool first = true;
  for (const auto& [key, value] : r.params) {
    if (!first) params += ',';
    params += '"' + key + "\":" + std::to_string(value);
    first = false;
  }
  params += '}';
  std::string out = "{\"id\":\"";
  out += to_string(r.id);
  out += "\",\"params\":" + params;
  out += ",\"n_samples\":" + std::to_string(r.n_samples);
  out += ",\"max_abs_residual\":" + fmt17(r.max_abs_residual);
  out += ",\"max_rel_residual\":" + fmt17(r.max_rel_residual);
  out += ",\"tolerance\":" + fmt17(r.tolerance);
  out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  out += ",\"worst_point\":{\"lambda\":" + fmt17(r.worst.lambda);
  out += ",\"a\":" + fmt17(r.worst.a);
  out += ",\"omega\":" + fmt17(r.worst.omega);
  out += ",\"x\":" + fmt17(r.worst.x) + "}";
  out += ",\"error\":\"" + json_escape(r.error) + "\"}";
  return out;
}

std::string report_csv_header() {
  return "id,m,n,k,lambda,a,omega,n_samples,max_abs_residual,max_rel_residual,"
         "tolerance,pass";
}

std::string report_csv_row(const IdentityReport& r) {
  std::string out{to_string(r.id)};
  out += ',' + param_cell(r.params, "m");
  out += ',' + param_cell(r.params, "n");
  out += ',' + param_cell(r.params, "k");
  out += ',' + fmt17(r.worst.lambda);
  out += ',' + fmt17(r.worst.a);
  out += ',' + fmt17(r.worst.omega);
  out += ',' + std::to_string(r.n_samples);
  out += ',' + fmt17(r.max_abs_residual);
  out += ',' + fmt17(r.max_rel_residual);
  out += ',' + fmt17(r.tolerance);
  out += r.pass ? ",true" : ",false";
  return out;
}

// ---------------------------------------------------------------------------
// runners

IdentityReport run_identity(IdentityId id, const Params& params, const SampleGrid& grid,
                            double rel_tolerance) {
  const IdentityInfo& info = identity_info(id);
  switch (info.param) {
    case ParamKind::m:
      require_param(params, "m");
      break;
    case ParamKind::n:
      require_param(params, "n");
      break;
    case ParamKind::k:
      require_param(params, "k");
      break;
    case ParamKind::none:
      break;
  }
  if (id == IdentityId::classical_limit) {
    return classical_limit_report(grid, info.pinned_tolerance);
  }
  const double tolerance = info.residual_mode == ResidualMode::relative
                               ? rel_tolerance
                               : info.pinned_tolerance;
  return run_generic(
      id, params, grid, info.arity,
      [id](const DegenContext& ctx, double x, double y, const Params& p, PairList& out) {
        eval_identity(id, p, ctx, x, y, out);
      },
      [id](const DegenContext& ctx, double x, double /*y*/, const Params& p,
           double margin) { return margins_ok(id, p, ctx, x, margin); },
      tolerance, info.residual_mode);
}

std::vector<IdentityReport> run_all(const SampleGrid& grid, int max_m, int max_n,
                                    double rel_tolerance) {
  if (max_m < 1 || max_n < 1) throw ParamError("run_all: max_m and max_n must be >= 1");
  std::vector<IdentityReport> reports;
  for (const IdentityInfo& info : identity_catalog()) {
    std::vector<Params> param_sets;
    switch (info.param) {
      case ParamKind::none:
        param_sets.push_back({});
        break;
      case ParamKind::m:
        for (int m = 1; m <= max_m; ++m) param_sets.push_back({{"m", m}});
        break;
      case ParamKind::n:
        for (int n = 1; n <= max_n; ++n) param_sets.push_back({{"n", n}});
        break;
      case ParamKind::k:
        for (int k = 1; k <= max_n; ++k) param_sets.push_back({{"k", k}});
        break;
    }
    for (const Params& params : param_sets) {
      try {
        reports.push_back(run_identity(info.id, params, grid, rel_tolerance));
      } catch (const std::exception& e) {
        IdentityReport failed;
        failed.id = info.id;
        failed.params = params;
        failed.tolerance = info.residual_mode == ResidualMode::relative
                               ? rel_tolerance
                               : info.pinned_tolerance;
        failed.pass = false;
        failed.error = e.what();
        reports.push_back(std::move(failed));
      }
    }
  }
  return reports;
}

bool admissible_point(IdentityId id, const Params& params, const DegenContext& ctx,
                      double x, double /*y*/, double margin) {
  return margins_ok(id, params, ctx, x, margin);
}

IdentityReport run_point_check(const PointCheck& check, IdentityId label,
                               const Params& params, const SampleGrid& grid,
                               double tolerance, ResidualMode mode) {
  return run_generic(label, params, grid, check.arity, check.eval, check.admissible,
                     tolerance, mode);
}

// ---------------------------------------------------------------------------
// classical limit

SweepResult classical_limit_sweep(double x, double a, std::span<const double> lambdas) {
  if (lambdas.empty()) throw DomainError("classical_limit_sweep: empty lambda grid");
  SweepResult result;
  result.lambdas.assign(lambdas.begin(), lambdas.end());
  double prev = std::numeric_limits<double>::infinity();
  for (const double lambda : lambdas) {
    if (!(lambda > 0.0) || !(lambda < prev)) {
      throw DomainError("classical_limit_sweep: lambdas must be positive and decreasing");
    }
    if (1.0 + lambda * a <= 0.0) {
      throw DomainError("classical_limit_sweep: 1 + lambda*a must be positive");
    }
    prev = lambda;
    const DegenContext ctx(lambda, a);
    const double err = std::abs(cos_l(ctx, x) - std::cos(a * x)) +
                       std::abs(sin_l(ctx, x) - std::sin(a * x));
    result.errors.push_back(err);
  }
  bool degenerate = false;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < result.errors.size(); ++i) {
    if (result.errors[i] <= 0.0) {
      degenerate = true;
      break;
    }
    lx.push_back(std::log(result.lambdas[i]));
    ly.push_back(std::log(result.errors[i]));
  }
  if (!degenerate && lx.size() >= 2) result.slope = fit_slope(lx, ly);
  return result;
}

std::vector<double> default_sweep_lambdas() {
  std::vector<double> out;
  for (int e = 3; e <= 15; ++e) out.push_back(std::ldexp(1.0, -e));
  return out;
}

// ---------------------------------------------------------------------------
// derivative convergence order

DerivOrderResult derivative_order_check(const DegenContext& ctx, int n_points,
                                        std::span<const double> h_values,
                                        std::uint64_t seed) {
  if (n_points < 1 || h_values.size() < 3) {
    throw ParamError("derivative_order_check: need points and at least 3 steps");
  }
  const double w = ctx.omega();
  const double half_period = kPi / std::abs(w);
  const double offset = first_offset(seed);
  DerivOrderResult result;
  std::vector<double> lh, lec, les;
  for (std::size_t i = 0; static_cast<int>(result.cos_slopes.size()) < n_points; ++i) {
    if (i > 256 * static_cast<std::size_t>(n_points)) {
      throw EmptyGridError("derivative_order_check: could not collect sample points");
    }
    const double x = (2.0 * weyl_point(offset, i) - 1.0) * half_period;
    // keep both trig factors away from zero so the h^2 term dominates
    if (std::abs(std::sin(x * w)) < 0.4 || std::abs(std::cos(x * w)) < 0.4) continue;
    lh.clear();
    lec.clear();
    les.clear();
    const auto fc = [w](double t) { return corrected_cos(t, w); };
    const auto fs = [w](double t) { return corrected_sin(t, w); };
    for (const double h : h_values) {
      const double ec = std::abs(central_diff(fc, x, h) - d_cos_l(ctx, x));
      const double es = std::abs(central_diff(fs, x, h) - d_sin_l(ctx, x));
      if (ec <= 0.0 || es <= 0.0) continue;
      lh.push_back(std::log(h));
      lec.push_back(std::log(ec));
      les.push_back(std::log(es));
    }
    if (lh.size() < 3) continue;
    result.cos_slopes.push_back(fit_slope(lh, lec));
    result.sin_slopes.push_back(fit_slope(lh, les));
  }
  return result;
}

// ---------------------------------------------------------------------------
// product prefactor audit

PrefactorCheck product_prefactor_check(int m) {
  if (m < 1) throw ParamError("product_prefactor_check: m must be >= 1");
  const std::complex<double> i(0.0, 1.0);
  const double scale = std::ldexp(1.0, 1 - 2 * m);  // 2^(1-2m) = 1/2^(2m-1), exact
  const std::complex<double> raw_cos =
      -(i * scale) * std::exp(-i * (m * kPi)) * std::exp(i * (kPi / 2.0));
  PrefactorCheck check;
  check.raw_cos = raw_cos;
  check.raw_sin = (m % 2 == 0 ? 1.0 : -1.0) * raw_cos;
  check.expected_cos = (m % 2 == 0 ? 1.0 : -1.0) * scale;
  check.expected_sin = scale;
  check.rel_err_cos = std::abs(check.raw_cos - check.expected_cos) / scale;
  check.rel_err_sin = std::abs(check.raw_sin - check.expected_sin) / scale;
  return check;
}

}  // namespace degentrig
