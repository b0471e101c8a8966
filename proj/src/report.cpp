#include "wpack/report.hpp"

#include <fstream>

#include "wpack/errors.hpp"

namespace wpack {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string mode_name(PerturbMode m) {
  return m == PerturbMode::kDelta ? "delta" : "absolute";
}

PerturbMode mode_from_name(const std::string& s) {
  if (s == "delta") return PerturbMode::kDelta;
  if (s == "absolute") return PerturbMode::kAbsolute;
  throw std::runtime_error("unknown perturb mode '" + s + "'");
}

ordered_json run_summary(const SolveReport& rep) {
  ordered_json j;
  j["seed"] = rep.seed;
  j["best_radius"] = rep.best_radius;
  j["best_energy"] = rep.best_energy;
  j["feasible"] = rep.feasible;
  j["max_pair_overlap"] = rep.max_pair_overlap;
  j["iterations_used"] = rep.iterations_used;
  j["wall_time_s"] = rep.wall_time_s;
  return j;
}

ordered_json layout_to_json(const Layout& layout) {
  ordered_json arr = ordered_json::array();
  for (const auto& st : layout) {
    arr.push_back(ordered_json::array({st.x, st.y, st.alpha}));
  }
  return arr;
}

}  // namespace

ordered_json config_to_json(const AnnealConfig& cfg) {
  ordered_json j;
  j["imax"] = cfg.imax;
  j["cmax"] = cfg.cmax;
  j["t0"] = cfg.t0;
  j["cool"] = cfg.cool;
  j["emax"] = cfg.emax;
  j["lambda1"] = cfg.weights.lambda1;
  j["lambda2"] = cfg.weights.lambda2;
  j["seed"] = cfg.seed;
  j["perturb_mode"] = mode_name(cfg.mode);
  j["trace_stride"] = cfg.trace_stride;
  return j;
}

AnnealConfig config_from_json(const json& j) {
  AnnealConfig cfg;
  cfg.imax = j.at("imax").get<int64_t>();
  cfg.cmax = j.at("cmax").get<int64_t>();
  cfg.t0 = j.at("t0").get<double>();
  cfg.cool = j.at("cool").get<double>();
  cfg.emax = j.at("emax").get<double>();
  cfg.weights.lambda1 = j.at("lambda1").get<double>();
  cfg.weights.lambda2 = j.at("lambda2").get<double>();
  cfg.seed = j.at("seed").get<uint64_t>();
  cfg.mode = mode_from_name(j.at("perturb_mode").get<std::string>());
  cfg.trace_stride = j.at("trace_stride").get<int64_t>();
  return cfg;
}

ordered_json report_to_json(const std::string& instance_name,
                            const AnnealConfig& cfg, const SolveReport& rep) {
  ordered_json j;
  j["schema"] = 1;
  j["type"] = "solve_report";
  j["instance"] = instance_name;
  j["config"] = config_to_json(cfg);
  j["best_radius"] = rep.best_radius;
  j["best_energy"] = rep.best_energy;
  j["feasible"] = rep.feasible;
  j["max_pair_overlap"] = rep.max_pair_overlap;
  j["iterations_used"] = rep.iterations_used;
  j["wall_time_s"] = rep.wall_time_s;
  j["seed"] = rep.seed;
  j["best_layout"] = layout_to_json(rep.best_layout);
  if (!rep.energy_trace.empty()) {
    ordered_json trace = ordered_json::array();
    for (const auto& [iter, e] : rep.energy_trace) {
      trace.push_back(ordered_json::array({iter, e}));
    }
    j["energy_trace"] = std::move(trace);
  }
  return j;
}

Layout layout_from_json(const json& j) {
  Layout layout;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::runtime_error("layout entries must be [x, y, alpha] triples");
    }
    layout.push_back(PolygonState{entry[0].get<double>(),
                                  entry[1].get<double>(),
                                  entry[2].get<double>()});
  }
  return layout;
}

ordered_json campaign_to_json(const std::string& instance_name,
                              const AnnealConfig& cfg,
                              const CampaignResult& result) {
  const CampaignStats& st = result.stats;
  ordered_json j;
  j["schema"] = 1;
  j["type"] = "campaign";
  j["instance"] = instance_name;
  j["config"] = config_to_json(cfg);
  j["runs"] = st.runs;
  j["r_best"] = st.r_best;
  j["r_mean"] = st.r_mean;
  j["r_variance"] = st.r_variance;
  j["r_stddev"] = std::sqrt(st.r_variance);
  j["mean_time_s"] = st.mean_time_s;
  j["best_run"] = st.best_run;
  j["all_feasible"] = [&result] {
    for (const auto& r : result.runs) {
      if (!r.feasible) return false;
    }
    return true;
  }();
  ordered_json runs = ordered_json::array();
  for (const auto& r : result.runs) runs.push_back(run_summary(r));
  j["run_reports"] = std::move(runs);
  j["best_layout"] = layout_to_json(result.runs[st.best_run].best_layout);
  return j;
}

ordered_json strip_wall_times(ordered_json j) {
  if (j.contains("wall_time_s")) j["wall_time_s"] = 0.0;
  if (j.contains("mean_time_s")) j["mean_time_s"] = 0.0;
  if (j.contains("run_reports")) {
    for (auto& r : j["run_reports"]) r["wall_time_s"] = 0.0;
  }
  return j;
}

void write_json_file(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

}  // namespace wpack
