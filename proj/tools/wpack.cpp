// Command-line front end: solve single instances, run benchmark campaigns,
// render layouts, validate results and generate random instances.
//
// Exit codes: 0 success, 1 infeasible result with --require-feasible,
// 2 usage/validation error, 3 output I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <iostream>
#include <string>

#include "wpack/annealer.hpp"
#include "wpack/errors.hpp"
#include "wpack/instances.hpp"
#include "wpack/report.hpp"
#include "wpack/svg.hpp"

namespace fs = std::filesystem;
using namespace wpack;

namespace {

struct Options {
  std::string instance;
  std::string report_path;
  std::string out_dir = ".";
  uint64_t seed = 1;
  int64_t imax = -1;
  int64_t cmax = -1;
  double t0 = -1.0;
  double cool = -1.0;
  double emax = -1.0;
  double lambda1 = -1.0;
  double lambda2 = -1.0;
  int64_t trace_stride = -1;
  std::string perturb_mode = "delta";
  bool svg = false;
  bool require_feasible = false;
  int runs = 40;
  int jobs = 1;
  // gen
  int gen_k = 40;
  double size_min = 1.0, size_max = 4.0;
  double mass_min = 1.0, mass_max = 10.0;
};

Instance resolve_instance(const std::string& ref) {
  const auto& ids = builtin_ids();
  if (std::find(ids.begin(), ids.end(), ref) != ids.end()) {
    return builtin_instance(ref);
  }
  try {
    return load_instance(ref);
  } catch (const IoError& e) {
    // unreadable inputs are usage errors; IoError is kept for outputs
    throw std::runtime_error(e.what());
  }
}

nlohmann::json read_input_json(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const IoError& e) {
    throw std::runtime_error(e.what());
  }
}

AnnealConfig build_config(const Instance& inst, const Options& o) {
  AnnealConfig cfg = default_config(inst);
  cfg.seed = o.seed;
  if (o.imax >= 0) cfg.imax = o.imax;
  if (o.cmax >= 0) cfg.cmax = o.cmax;
  if (o.t0 >= 0.0) cfg.t0 = o.t0;
  if (o.cool >= 0.0) cfg.cool = o.cool;
  if (o.emax >= 0.0) cfg.emax = o.emax;
  if (o.lambda1 >= 0.0) cfg.weights.lambda1 = o.lambda1;
  if (o.lambda2 >= 0.0) cfg.weights.lambda2 = o.lambda2;
  if (o.trace_stride >= 0) cfg.trace_stride = o.trace_stride;
  if (o.perturb_mode == "delta") {
    cfg.mode = PerturbMode::kDelta;
  } else if (o.perturb_mode == "absolute") {
    cfg.mode = PerturbMode::kAbsolute;
  } else {
    throw std::invalid_argument("--perturb-mode must be 'delta' or 'absolute'");
  }
  return cfg;
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "'");
  return p;
}

int cmd_solve(const Options& o) {
  const Instance inst = resolve_instance(o.instance);
  AnnealConfig cfg = build_config(inst, o);
  if (o.trace_stride < 0) cfg.trace_stride = std::max<int64_t>(1, cfg.imax / 512);
  const SolveReport rep = anneal(inst, cfg);

  const fs::path out = prepare_out_dir(o.out_dir);
  auto j = report_to_json(inst.name, cfg, rep);
  if (inst.known_optimum) {
    j["known_optimum"] = *inst.known_optimum;
    j["excess_over_optimum"] = rep.best_radius / *inst.known_optimum - 1.0;
  }
  write_json_file(j, (out / "report.json").string());
  if (o.svg) render_svg(inst, rep.best_layout, (out / "layout.svg").string());

  std::cout << "instance=" << inst.name << " best_radius=" << rep.best_radius
            << " best_energy=" << rep.best_energy << " feasible="
            << (rep.feasible ? "true" : "false")
            << " iterations_used=" << rep.iterations_used
            << " wall_time_s=" << rep.wall_time_s << "\n";
  if (inst.known_optimum) {
    std::cout << "known_optimum=" << *inst.known_optimum << " excess="
              << (rep.best_radius / *inst.known_optimum - 1.0) << "\n";
  }
  return (o.require_feasible && !rep.feasible) ? 1 : 0;
}

int cmd_bench(const Options& o) {
  const Instance inst = resolve_instance(o.instance);
  const AnnealConfig cfg = build_config(inst, o);
  const CampaignResult result = run_campaign(inst, cfg, o.runs, o.jobs);
  const CampaignStats& st = result.stats;

  const fs::path out = prepare_out_dir(o.out_dir);
  auto j = campaign_to_json(inst.name, cfg, result);
  if (inst.known_optimum) {
    j["known_optimum"] = *inst.known_optimum;
    j["excess_over_optimum"] = st.r_best / *inst.known_optimum - 1.0;
  }
  write_json_file(j, (out / "campaign.json").string());
  if (o.svg) {
    render_svg(inst, result.runs[st.best_run].best_layout,
               (out / "layout.svg").string());
  }

  std::cout << "instance=" << inst.name << " runs=" << st.runs
            << " r_best=" << st.r_best << " r_mean=" << st.r_mean
            << " r_variance=" << st.r_variance
            << " r_stddev=" << std::sqrt(st.r_variance)
            << " mean_time_s=" << st.mean_time_s << " all_feasible="
            << (j.at("all_feasible").get<bool>() ? "true" : "false") << "\n";
  if (inst.known_optimum) {
    std::cout << "known_optimum=" << *inst.known_optimum << " excess="
              << (st.r_best / *inst.known_optimum - 1.0) << "\n";
  }
  const bool best_feasible = result.runs[st.best_run].feasible;
  return (o.require_feasible && !best_feasible) ? 1 : 0;
}

int cmd_render(const Options& o) {
  const Instance inst = resolve_instance(o.instance);
  const auto j = read_input_json(o.report_path);
  const Layout layout = layout_from_json(j.at("best_layout"));
  const fs::path out = prepare_out_dir(o.out_dir);
  render_svg(inst, layout, (out / "layout.svg").string());
  std::cout << "wrote " << (out / "layout.svg").string() << "\n";
  return 0;
}

int cmd_validate(const Options& o) {
  const Instance inst = resolve_instance(o.instance);
  if (o.report_path.empty()) {
    double rmax = 0.0;
    for (const auto& p : inst.polygons) rmax = std::max(rmax, p.radius());
    std::cout << "instance=" << inst.name << " k=" << inst.size()
              << " r0=" << inst.initial_radius << " max_polygon_radius="
              << rmax << " valid=true\n";
    return 0;
  }
  const auto j = read_input_json(o.report_path);
  const Layout layout = layout_from_json(j.at("best_layout"));
  const ValidationReport audit = validate_solution(inst, layout);
  EnergyWeights w;
  if (j.contains("config")) {
    w.lambda1 = j["config"].at("lambda1").get<double>();
    w.lambda2 = j["config"].at("lambda2").get<double>();
  }
  const double e = energy(inst, layout, w);
  std::cout << "instance=" << inst.name << " feasible="
            << (audit.feasible ? "true" : "false") << " radius=" << audit.radius
            << " max_pair_overlap=" << audit.max_pair_overlap
            << " energy=" << e << "\n";
  return audit.feasible ? 0 : 1;
}

int cmd_gen(const Options& o) {
  const Instance inst = random_rectangles(
      o.gen_k, {o.size_min, o.size_max}, {o.mass_min, o.mass_max}, o.seed);
  const fs::path out = prepare_out_dir(o.out_dir);
  const fs::path path = out / (inst.name + ".txt");
  save_instance(inst, path.string());
  double area = 0.0;
  for (const auto& p : inst.polygons) area += p.area();
  std::cout << "wrote " << path.string() << " k=" << inst.size()
            << " r0=" << inst.initial_radius
            << " area_lower_bound=" << std::sqrt(area / std::numbers::pi) << "\n";
  return 0;
}

void add_common_flags(CLI::App* sub, Options& o, bool with_solver_flags) {
  sub->add_option("--instance", o.instance, "builtin id or instance file path")
      ->required();
  if (with_solver_flags) {
    sub->add_option("--seed", o.seed, "master RNG seed");
    sub->add_option("--imax", o.imax, "iteration budget (default 20000*k)");
    sub->add_option("--cmax", o.cmax, "cooling period (default 100*k)");
    sub->add_option("--t0", o.t0, "initial temperature (default 100)");
    sub->add_option("--cool", o.cool, "cooling factor in (0,1) (default 0.95)");
    sub->add_option("--emax", o.emax, "early-stop energy (default 0)");
    sub->add_option("--lambda1", o.lambda1, "overlap weight (default 100)");
    sub->add_option("--lambda2", o.lambda2, "radius weight (default 100)");
    sub->add_option("--perturb-mode", o.perturb_mode,
                    "perturbation mode: delta|absolute");
    sub->add_option("--trace-stride", o.trace_stride,
                    "energy trace stride (0 disables)");
    sub->add_flag("--require-feasible", o.require_feasible,
                  "exit 1 unless the best layout is overlap-free");
  }
  sub->add_option("--out", o.out_dir, "output directory (default '.')");
  sub->add_flag("--svg", o.svg, "also write layout.svg");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted polygon packing in a balanced circular container"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "run one annealing solve");
  add_common_flags(solve, o, true);

  CLI::App* bench =
      app.add_subcommand("bench", "run a campaign of independent solves");
  add_common_flags(bench, o, true);
  bench->add_option("--runs", o.runs, "number of runs (default 40)");
  bench->add_option("--jobs", o.jobs, "worker threads (default 1)");

  CLI::App* render =
      app.add_subcommand("render", "render a saved report to SVG");
  add_common_flags(render, o, false);
  render->add_option("--report", o.report_path, "report.json path")->required();

  CLI::App* validate = app.add_subcommand(
      "validate", "validate an instance or audit a saved report");
  add_common_flags(validate, o, false);
  validate->add_option("--report", o.report_path, "report.json path");

  CLI::App* gen =
      app.add_subcommand("gen", "generate a random rectangle instance");
  gen->add_option("--k", o.gen_k, "number of rectangles")->required();
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--size-min", o.size_min, "minimum edge length");
  gen->add_option("--size-max", o.size_max, "maximum edge length");
  gen->add_option("--mass-min", o.mass_min, "minimum mass");
  gen->add_option("--mass-max", o.mass_max, "maximum mass");
  gen->add_option("--out", o.out_dir, "output directory (default '.')");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (bench->parsed()) return cmd_bench(o);
    if (render->parsed()) return cmd_render(o);
    if (validate->parsed()) return cmd_validate(o);
    if (gen->parsed()) return cmd_gen(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
