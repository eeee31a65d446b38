// degentrig command-line front end: point evaluation, identity verification,
// lambda -> 0 sweeps and exact series certification, with JSON/CSV output.
//
// Exit codes: 0 all checks passed, 1 at least one identity check failed,
// 2 domain/pole error, 64 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "degentrig/degen_trig.hpp"
#include "degentrig/exact_series.hpp"
#include "degentrig/identity_suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputSink {
  std::string buffer;
  void line(const std::string& s) {
    buffer += s;
    buffer += '\n';
  }
  // Single write keeps repeated runs byte-identical.
  int flush(const std::string& path) const {
    if (path.empty()) {
      std::fwrite(buffer.data(), 1, buffer.size(), stdout);
      return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "degentrig: cannot open output file '" << path << "'\n";
      return kExitDomain;
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    return 0;
  }
};

int run_eval(const std::string& fn, double lambda, double a, double x,
             const std::string& format, const std::string& out_path) {
  using namespace degentrig;
  double value = 0.0;
  double w = 0.0;
  if (fn == "exp") {
    value = degen_exp_closed(x, lambda, a);
    w = omega(lambda, a);
  } else {
    const DegenContext ctx(lambda, a);
    w = ctx.omega();
    if (fn == "cos") value = cos_l(ctx, x);
    else if (fn == "sin") value = sin_l(ctx, x);
    else if (fn == "tan") value = tan_l(ctx, x);
    else if (fn == "cot") value = cot_l(ctx, x);
    else if (fn == "cosh") value = cosh_l(ctx, x);
    else if (fn == "sinh") value = sinh_l(ctx, x);
    else if (fn == "tanh") value = tanh_l(ctx, x);
    else if (fn == "coth") value = coth_l(ctx, x);
  }
  OutputSink sink;
  if (format == "csv") {
    sink.line("function,lambda,a,omega,x,value");
    sink.line(fn + ',' + fmt17(lambda) + ',' + fmt17(a) + ',' + fmt17(w) + ',' +
              fmt17(x) + ',' + fmt17(value));
  } else {
    sink.line("{\"function\":\"" + fn + "\",\"lambda\":" + fmt17(lambda) +
              ",\"a\":" + fmt17(a) + ",\"omega\":" + fmt17(w) + ",\"x\":" + fmt17(x) +
              ",\"value\":" + fmt17(value) + "}");
  }
  return sink.flush(out_path);
}

int run_verify(std::optional<double> lambda, std::optional<double> a, int max_m,
               int max_n, std::uint64_t seed, double tolerance,
               const std::string& format, const std::string& out_path) {
  using namespace degentrig;
  const SampleGrid grid = (lambda && a)
                              ? SampleGrid::make({DegenContext(*lambda, *a)}, seed)
                              : SampleGrid::make_default(seed);
  const std::vector<IdentityReport> reports = run_all(grid, max_m, max_n, tolerance);

  OutputSink sink;
  if (format == "csv") sink.line(report_csv_header());
  long passed = 0;
  for (const IdentityReport& r : reports) {
    sink.line(format == "csv" ? report_csv_row(r) : report_json_line(r));
    passed += r.pass ? 1 : 0;
  }
  const int rc = sink.flush(out_path);
  if (rc != 0) return rc;
  std::cerr << "verify: " << passed << "/" << reports.size() << " reports passed (seed="
            << seed << ", tolerance=" << fmt17(tolerance) << ")\n";
  return passed == static_cast<long>(reports.size()) ? kExitPass : kExitCheckFailed;
}

int run_sweep(double x, double a, const std::string& format,
              const std::string& out_path) {
  using namespace degentrig;
  const std::vector<double> lambdas = default_sweep_lambdas();
  const SweepResult result = classical_limit_sweep(x, a, lambdas);

  OutputSink sink;
  if (format == "csv") {
    sink.line("lambda,error");
    for (std::size_t i = 0; i < result.lambdas.size(); ++i) {
      sink.line(fmt17(result.lambdas[i]) + ',' + fmt17(result.errors[i]));
    }
    sink.line(result.slope ? "slope," + fmt17(*result.slope) : "slope,degenerate");
  } else {
    for (std::size_t i = 0; i < result.lambdas.size(); ++i) {
      sink.line("{\"lambda\":" + fmt17(result.lambdas[i]) +
                ",\"error\":" + fmt17(result.errors[i]) + "}");
    }
    if (result.slope) {
      sink.line("{\"slope\":" + fmt17(*result.slope) + "}");
    } else {
      sink.line("{\"slope\":null,\"note\":\"degenerate\"}");
    }
  }
  const int rc = sink.flush(out_path);
  if (rc != 0) return rc;
  if (!result.slope) {
    std::cerr << "sweep: all errors vanish; slope fit skipped (degenerate)\n";
    return kExitPass;
  }
  std::cerr << "sweep: fitted slope " << fmt17(*result.slope) << "\n";
  return (*result.slope >= 0.85 && *result.slope <= 1.15) ? kExitPass : kExitCheckFailed;
}

std::string param_cell(const degentrig::Params& params, const char* key) {
  const auto it = params.find(key);
  return it == params.end() ? std::string() : std::to_string(it->second);
}

std::string params_json(const degentrig::Params& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out += ',';
    out += '"' + std::string(key) + "\":" + std::to_string(value);
    first = false;
  }
  return out + "}";
}

int run_series_verify(int order, const std::string& format, const std::string& out_path) {
  using namespace degentrig;
  using namespace degentrig::exact;

  OutputSink sink;
  if (format == "csv") {
    sink.line("id,m,n,k,x,y,lambda,order,pass,first_failing_coefficient");
  }
  long total = 0, passed = 0;
  for (const RationalTriple& triple : default_triples()) {
    for (const IdentityInfo& info : identity_catalog()) {
      if (info.exactness != Exactness::exact_capable) continue;
      std::vector<Params> param_sets;
      switch (info.param) {
        case ParamKind::m:
          for (int m = 1; m <= 6; ++m) param_sets.push_back({{"m", m}});
          break;
        case ParamKind::n:
          for (int n = 1; n <= 8; ++n) param_sets.push_back({{"n", n}});
          break;
        case ParamKind::k:
          for (int k = 1; k <= 8; ++k) param_sets.push_back({{"k", k}});
          break;
        case ParamKind::none:
          param_sets.push_back({});
          break;
      }
      for (const Params& params : param_sets) {
        const ExactVerification v =
            verify_exact(info.id, triple.x, triple.y, triple.lambda, params, order);
        ++total;
        passed += v.pass ? 1 : 0;
        const std::string fail_idx =
            v.first_failing_coefficient ? std::to_string(*v.first_failing_coefficient)
                                        : std::string();
        if (format == "csv") {
          sink.line(std::string(info.name) + ',' + param_cell(params, "m") + ',' +
                    param_cell(params, "n") + ',' + param_cell(params, "k") + ',' +
                    triple.x.str() + ',' + triple.y.str() + ',' + triple.lambda.str() +
                    ',' + std::to_string(order) + ',' + (v.pass ? "true" : "false") +
                    ',' + fail_idx);
        } else {
          sink.line("{\"id\":\"" + std::string(info.name) +
                    "\",\"params\":" + params_json(params) + ",\"x\":\"" +
                    triple.x.str() + "\",\"y\":\"" + triple.y.str() +
                    "\",\"lambda\":\"" + triple.lambda.str() +
                    "\",\"order\":" + std::to_string(order) +
                    ",\"pass\":" + (v.pass ? "true" : "false") +
                    ",\"first_failing_coefficient\":" +
                    (fail_idx.empty() ? "null" : fail_idx) + "}");
        }
      }
    }
  }
  const int rc = sink.flush(out_path);
  if (rc != 0) return rc;
  std::cerr << "series-verify: " << passed << "/" << total << " checks passed (order="
            << order << ")\n";
  return passed == total ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed trigonometric function library and identity checker"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one function at a point");
  std::string fn;
  double ev_lambda = 0, ev_a = 0, ev_x = 0;
  eval_cmd->add_option("--fn", fn, "function name")
      ->required()
      ->check(CLI::IsMember(
          {"cos", "sin", "tan", "cot", "cosh", "sinh", "tanh", "coth", "exp"}));
  eval_cmd->add_option("--lambda", ev_lambda, "deformation parameter")->required();
  eval_cmd->add_option("--a", ev_a, "series argument")->required();
  eval_cmd->add_option("--x", ev_x, "evaluation point")->required();
  eval_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  eval_cmd->add_option("--out", out_path, "write records to a file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  std::optional<double> vf_lambda, vf_a;
  int max_m = 8, max_n = 16;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  verify_cmd->add_option("--lambda", vf_lambda,
                         "restrict to one context (requires --a)");
  verify_cmd->add_option("--a", vf_a, "restrict to one context (requires --lambda)");
  verify_cmd->add_option("--max-m", max_m, "largest multiple-angle index m")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", max_n, "largest polynomial degree n/k")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "sample stream seed");
  verify_cmd->add_option("--tolerance", tolerance, "relative residual tolerance");
  verify_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out_path, "write records to a file");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "lambda -> 0 convergence sweep");
  double sw_x = 0, sw_a = 0;
  sweep_cmd->add_option("--x", sw_x, "evaluation point")->required();
  sweep_cmd->add_option("--a", sw_a, "series argument")->required();
  sweep_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--out", out_path, "write records to a file");

  // series-verify
  auto* series_cmd =
      app.add_subcommand("series-verify", "exact truncated-series certification");
  int order = 32;
  series_cmd->add_option("--order", order, "truncation order")
      ->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  series_cmd->add_option("--out", out_path, "write records to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (const char* env_seed = std::getenv("DEGENTRIG_SEED")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env_seed, &end, 10);
    if (end == env_seed || *end != '\0') {
      std::cerr << "degentrig: DEGENTRIG_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
    seed = parsed;
  }

  try {
    if (*eval_cmd) return run_eval(fn, ev_lambda, ev_a, ev_x, format, out_path);
    if (*verify_cmd) {
      if (vf_lambda.has_value() != vf_a.has_value()) {
        std::cerr << "degentrig: --lambda and --a must be given together\n";
        return kExitUsage;
      }
      return run_verify(vf_lambda, vf_a, max_m, max_n, seed, tolerance, format,
                        out_path);
    }
    if (*sweep_cmd) return run_sweep(sw_x, sw_a, format, out_path);
    if (*series_cmd) return run_series_verify(order, format, out_path);
  } catch (const degentrig::DomainError& e) {
    std::cerr << "degentrig: " << e.what() << "\n";
    return kExitDomain;
  } catch (const degentrig::PoleError& e) {
    std::cerr << "degentrig: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "degentrig: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
