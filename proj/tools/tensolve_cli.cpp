// Command-line front end: solve / oracle / verify / check / random / bench.
//
// Exit codes: 0 success, 1 input error, 2 degenerate instance,
//             3 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "instance_io.hpp"
#include "tensolve/tensolve.hpp"

namespace {

using namespace tensolve;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitMismatch = 3;

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  char* end = nullptr;
  const double x = std::strtod(v, &end);
  return (end && *end == '\0') ? x : fallback;
}

SolveConfig default_config() {
  SolveConfig cfg;
  cfg.tol_det = env_or("TENSOLVE_TOL_DET", cfg.tol_det);
  cfg.tol_rcond = env_or("TENSOLVE_TOL_RCOND", cfg.tol_rcond);
  cfg.tol_residual = env_or("TENSOLVE_TOL_RESIDUAL", cfg.tol_residual);
  return cfg;
}

std::string default_report_path(const std::string& input) {
  const auto dot = input.rfind(".json");
  if (dot != std::string::npos && dot == input.size() - 5)
    return input.substr(0, dot) + ".report.json";
  return input + ".report.json";
}

Rank3 random_source(std::uint64_t seed) {
  tensolve::detail::SplitMix64 rng(seed);
  Rank3 b;
  for (double& x : b.c) x = rng.uniform(1.0);
  return b;
}

int cmd_solve(const std::string& input, std::string output,
              const SolveConfig& cfg, bool verbose) {
  const auto inst = io::load_instance(input);
  const SolveReport rep = solve(inst.params, inst.metric, inst.b, cfg);
  if (output.empty()) output = default_report_path(input);
  io::write_json(output, io::report_to_json(inst, rep, verbose));
  std::printf("status        %s\n", to_string(rep.status));
  std::printf("det(Gamma)    %.17g\n", rep.det_gamma);
  std::printf("det(A)        %.17g\n", rep.det_a);
  if (rep.status == SolveStatus::solved) {
    std::printf("residual_rel  %.3e\n", rep.residual_rel);
    std::printf("report        %s\n", output.c_str());
    if (verbose) {
      std::printf("rcond(Gamma)  %.3e\n", rep.rcond_gamma);
      std::printf("rcond(A)      %.3e\n", rep.rcond_a);
      std::printf("timings us: traces %.1f gamma %.1f rhs %.1f a %.1f "
                  "extract %.1f residual %.1f\n",
                  rep.timings.traces_us, rep.timings.gamma_us,
                  rep.timings.rhs_us, rep.timings.a_matrix_us,
                  rep.timings.extract_us, rep.timings.residual_us);
    }
    return kExitOk;
  }
  std::printf("instance refused: %s (rcond_gamma %.3e, rcond_a %.3e)\n",
              to_string(rep.status), rep.rcond_gamma, rep.rcond_a);
  return kExitDegenerate;
}

int cmd_oracle(const std::string& input, std::string output, bool verbose) {
  const auto inst = io::load_instance(input);
  const LeviCivita eps(inst.metric);
  const OracleResult res =
      oracle_solve(inst.params, inst.metric, eps, inst.b);
  std::printf("operator det  %.17g\n", res.det);
  std::printf("min pivot     %.3e\n", res.min_pivot);
  if (!res.ok) {
    std::printf("instance refused: singular 64x64 operator\n");
    return kExitDegenerate;
  }
  SolveReport rep;
  rep.status = SolveStatus::solved;
  rep.n_solution = res.n;
  rep.det_a = res.det;  // report the operator determinant in the det_a slot
  rep.residual_rel = residual(inst.params, inst.metric, eps, res.n, inst.b);
  if (output.empty()) output = default_report_path(input);
  io::write_json(output, io::report_to_json(inst, rep, verbose));
  std::printf("residual_rel  %.3e\n", rep.residual_rel);
  std::printf("report        %s\n", output.c_str());
  return kExitOk;
}

int cmd_verify(const std::string& input, double tol,
               const std::string& against) {
  const auto inst = io::load_instance(input);
  const LeviCivita eps(inst.metric);
  const SolveReport rep = solve(inst.params, inst.metric, inst.b,
                                default_config());
  Rank3 reference;
  if (against.empty()) {
    const OracleResult res =
        oracle_solve(inst.params, inst.metric, eps, inst.b);
    if (rep.status != SolveStatus::solved || !res.ok) {
      const bool both_refuse = rep.status != SolveStatus::solved && !res.ok;
      std::printf("structured: %s, oracle: %s\n", to_string(rep.status),
                  res.ok ? "solved" : "singular");
      return both_refuse ? kExitDegenerate
                         : kExitMismatch;  // disagreement about solvability
    }
    reference = res.n;
  } else {
    const auto golden = io::load_report(against);
    if (rep.status != SolveStatus::solved || golden.status != "solved") {
      std::printf("structured: %s, golden: %s\n", to_string(rep.status),
                  golden.status.c_str());
      return rep.status != SolveStatus::solved && golden.status != "solved"
                 ? kExitDegenerate
                 : kExitMismatch;
    }
    reference = golden.n;
  }
  double scale = std::max(max_abs(reference), 1e-300);
  double worst = 0.0;
  int worst_idx = 0;
  for (int i = 0; i < 64; ++i) {
    const double d = std::abs(rep.n_solution.c[i] - reference.c[i]);
    if (d > worst) {
      worst = d;
      worst_idx = i;
    }
  }
  const double rel = worst / scale;
  std::printf("max-norm relative difference: %.3e (tolerance %.1e)\n", rel,
              tol);
  if (rel < tol) return kExitOk;
  std::printf("worst component: flat index %d = (%d,%d,%d)\n", worst_idx,
              worst_idx / 16, (worst_idx / 4) % 4, worst_idx % 4);
  return kExitMismatch;
}

int cmd_check(const std::string& input) {
  const auto inst = io::load_instance(input);
  const LeviCivita eps(inst.metric);
  const SolveConfig cfg = default_config();
  const TraceSystem ts =
      TraceSystem::build(inst.params, inst.metric.sign_factor());
  const PermSystem ps =
      PermSystem::build(inst.params, inst.metric.sign_factor());
  const OperatorMatrix op = build_operator(inst.params, inst.metric, eps);
  std::printf("det(Gamma)    %.17g   rcond %.3e\n", ts.det, ts.rcond);
  std::printf("det(A)        %.17g   rcond %.3e\n", ps.det, ps.rcond);
  std::printf("det(64x64 op) %.17g   min pivot %.3e\n", op.det, op.min_pivot);
  const bool g_ok = tensolve::detail::passes_gate(
      ts.det, ts.rcond, max_norm<4>(ts.gamma), 4, cfg);
  const bool a_ok = tensolve::detail::passes_gate(
      ps.det, ps.rcond, max_norm<15>(ps.a_mat), 15, cfg);
  if (g_ok && a_ok) {
    std::printf("solvable\n");
    return kExitOk;
  }
  std::printf("degenerate (%s)\n", !g_ok ? "Gamma gate" : "A gate");
  return kExitDegenerate;
}

int cmd_random(std::uint64_t seed, double scale, const std::string& metric,
               const std::string& output) {
  io::ParsedInstance inst;
  if (metric == "euclidean")
    inst.metric = Metric::euclidean();
  else if (metric == "minkowski")
    inst.metric = Metric::minkowski();
  else {
    std::fprintf(stderr, "unknown metric \"%s\"\n", metric.c_str());
    return kExitInputError;
  }
  inst.params = random_params(seed, scale);
  inst.b = random_source(seed ^ 0x9e3779b97f4a7c15ULL);
  io::write_json(output, io::instance_to_json(inst));
  std::printf("wrote %s (seed %llu, scale %g, %s)\n", output.c_str(),
              static_cast<unsigned long long>(seed), scale, metric.c_str());
  return kExitOk;
}

int cmd_bench(int count, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::vector<double> structured_us, oracle_us;
  structured_us.reserve(count);
  oracle_us.reserve(count);
  const Metric metrics[2] = {Metric::euclidean(), Metric::minkowski()};
  const LeviCivita eps_tables[2] = {LeviCivita(metrics[0]),
                                    LeviCivita(metrics[1])};
  SolveConfig cfg = default_config();
  cfg.compute_residual = false;
  int solved = 0, refused = 0, disagreements = 0;
  for (int i = 0; i < count; ++i) {
    const int mi = i % 2;
    const ParameterSet p = random_params(seed + i, 1.0);
    const Rank3 b = random_source(seed + 0x10000 + i);
    auto t0 = clock::now();
    const SolveReport rep = solve(p, metrics[mi], b, cfg);
    structured_us.push_back(
        std::chrono::duration<double, std::micro>(clock::now() - t0).count());
    t0 = clock::now();
    const OracleResult res = oracle_solve(p, metrics[mi], eps_tables[mi], b);
    oracle_us.push_back(
        std::chrono::duration<double, std::micro>(clock::now() - t0).count());
    if (rep.status == SolveStatus::solved) {
      ++solved;
      if (res.ok &&
          max_abs_diff(rep.n_solution, res.n) >
              1e-9 * std::max(max_abs(res.n), 1e-300))
        ++disagreements;
    } else {
      ++refused;
    }
  }
  auto stats = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double med = v.empty() ? 0.0 : v[v.size() / 2];
    const double p99 =
        v.empty() ? 0.0 : v[std::min(v.size() - 1, (v.size() * 99) / 100)];
    return std::pair{med, p99};
  };
  const auto [smed, sp99] = stats(structured_us);
  const auto [omed, op99] = stats(oracle_us);
  std::printf("instances      %d (solved %d, refused %d)\n", count, solved,
              refused);
  if (count == 0) return kExitOk;
  std::printf("structured us  median %.1f   p99 %.1f\n", smed, sp99);
  std::printf("oracle us      median %.1f   p99 %.1f\n", omed, op99);
  std::printf("speedup        %.2fx\n", smed > 0 ? omed / smed : 0.0);
  if (disagreements > 0) {
    std::printf("WARNING: %d solved instances disagree with the oracle\n",
                disagreements);
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for the general 30-parameter linear equation of a "
               "rank-3 tensor in 4 dimensions"};
  app.require_subcommand(1);

  SolveConfig cfg = default_config();
  std::string input, output, metric = "minkowski", against;
  bool verbose = false;
  double verify_tol = 1e-9;
  std::uint64_t seed = 0;
  double scale = 1.0;
  int count = 1000;

  auto* solve_cmd = app.add_subcommand("solve", "structured solve of an instance file");
  solve_cmd->add_option("input", input, "instance JSON file")->required();
  solve_cmd->add_option("-o,--output", output, "report path (default: <input>.report.json)");
  solve_cmd->add_option("--tol-det", cfg.tol_det, "determinant gate factor");
  solve_cmd->add_option("--tol-rcond", cfg.tol_rcond, "reciprocal-condition gate");
  solve_cmd->add_option("--tol-residual", cfg.tol_residual, "residual threshold");
  solve_cmd->add_flag("-v,--verbose", verbose, "extra diagnostics in report and stdout");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force 64x64 solve of an instance file");
  oracle_cmd->add_option("input", input, "instance JSON file")->required();
  oracle_cmd->add_option("-o,--output", output, "report path");
  oracle_cmd->add_flag("-v,--verbose", verbose);

  auto* verify_cmd = app.add_subcommand("verify", "diff structured solve against the oracle (or a golden report)");
  verify_cmd->add_option("input", input, "instance JSON file")->required();
  verify_cmd->add_option("--against", against, "golden report to compare instead of the oracle");
  verify_cmd->add_option("--tol", verify_tol, "max-norm relative tolerance");

  auto* check_cmd = app.add_subcommand("check", "degeneracy report only");
  check_cmd->add_option("input", input, "instance JSON file")->required();

  auto* random_cmd = app.add_subcommand("random", "emit a reproducible random instance file");
  random_cmd->add_option("-s,--seed", seed, "RNG seed");
  random_cmd->add_option("--scale", scale, "parameter range [-scale, scale]");
  random_cmd->add_option("--metric", metric, "euclidean | minkowski");
  random_cmd->add_option("-o,--output", output, "output path")->required();

  auto* bench_cmd = app.add_subcommand("bench", "structured vs oracle throughput");
  bench_cmd->add_option("-n,--count", count, "number of instances");
  bench_cmd->add_option("-s,--seed", seed, "base seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(input, output, cfg, verbose);
    if (oracle_cmd->parsed()) return cmd_oracle(input, output, verbose);
    if (verify_cmd->parsed()) return cmd_verify(input, verify_tol, against);
    if (check_cmd->parsed()) return cmd_check(input);
    if (random_cmd->parsed()) return cmd_random(seed, scale, metric, output);
    if (bench_cmd->parsed()) return cmd_bench(count, seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
