#include "wpack/annealer.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace wpack {

namespace {

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;
  return a;
}

void validate_config(const Instance& inst, const AnnealConfig& cfg) {
  if (inst.size() < 1) throw std::invalid_argument("instance has no polygons");
  if (!(inst.initial_radius > 0.0)) {
    throw std::invalid_argument("R0 must be positive");
  }
  if (cfg.imax < 1) throw std::invalid_argument("imax must be >= 1");
  if (cfg.cmax < 1) throw std::invalid_argument("cmax must be >= 1");
  if (!std::isfinite(cfg.t0) || cfg.t0 <= 0.0) {
    throw std::invalid_argument("t0 must be positive");
  }
  if (!std::isfinite(cfg.cool) || cfg.cool <= 0.0 || cfg.cool >= 1.0) {
    throw std::invalid_argument("cooling factor must lie in (0, 1)");
  }
  if (!std::isfinite(cfg.emax) || cfg.emax < 0.0) {
    throw std::invalid_argument("emax must be finite and >= 0");
  }
  if (!std::isfinite(cfg.weights.lambda1) || cfg.weights.lambda1 <= 0.0 ||
      !std::isfinite(cfg.weights.lambda2) || cfg.weights.lambda2 <= 0.0) {
    throw std::invalid_argument("energy weights must be positive and finite");
  }
  if (cfg.trace_stride < 0) {
    throw std::invalid_argument("trace stride must be >= 0");
  }
}

// Incremental layout scorer. Every quantity is produced by the same shared
// helpers and in the same summation order as the model-module functions, so
// the cached energy stays bit-identical to a from-scratch evaluation.
class LayoutScorer {
 public:
  LayoutScorer(const Instance& inst, const EnergyWeights& w, Layout initial)
      : inst_(&inst),
        w_(w),
        k_(inst.size()),
        states_(std::move(initial)),
        world_(k_),
        scratch_(k_),
        pairm_(Eigen::MatrixXd::Zero(k_, k_)),
        prop_row_(k_, 0.0) {
    total_mass_ = 0.0;
    mass_.reserve(k_);
    for (const auto& p : inst_->polygons) {
      mass_.push_back(p.mass());
      total_mass_ += p.mass();
    }
    for (int i = 0; i < k_; ++i) {
      world_vertices_into(inst_->polygons[i], states_[i], world_[i]);
      scratch_[i] = world_[i];
    }
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        pairm_(i, j) = pairm_(j, i) = pair_measure(i, world_[i], states_[i],
                                                   j, world_[j], states_[j]);
      }
    }
    ove_ = ordered_sum(pairm_, -1);
    radius_ = layout_radius_cached(-1, PolygonState{});
    f_ = combine_energy(w_, ove_, radius_);
  }

  double energy_value() const { return f_; }
  const Layout& states() const { return states_; }

  // Score the layout with polygon j moved to cand; nothing is committed.
  double propose(int j, const PolygonState& cand) {
    prop_j_ = j;
    prop_state_ = cand;
    world_vertices_into(inst_->polygons[j], cand, scratch_[j]);
    const Point cj = cand.position();
    for (int i = 0; i < k_; ++i) {
      if (i == j) {
        prop_row_[i] = 0.0;
      } else if (i < j) {
        prop_row_[i] = overlap_measure(inst_->polygons[i],
                                       states_[i].position(), world_[i],
                                       inst_->polygons[j], cj, scratch_[j]);
      } else {
        prop_row_[i] = overlap_measure(inst_->polygons[j], cj, scratch_[j],
                                       inst_->polygons[i],
                                       states_[i].position(), world_[i]);
      }
    }
    prop_ove_ = ordered_sum(pairm_, j);
    prop_radius_ = layout_radius_cached(j, cand);
    prop_f_ = combine_energy(w_, prop_ove_, prop_radius_);
    return prop_f_;
  }

  void commit() {
    const int j = prop_j_;
    states_[j] = prop_state_;
    world_[j].swap(scratch_[j]);
    for (int i = 0; i < k_; ++i) {
      if (i != j) pairm_(i, j) = pairm_(j, i) = prop_row_[i];
    }
    ove_ = prop_ove_;
    radius_ = prop_radius_;
    f_ = prop_f_;
  }

 private:
  double pair_measure(int i, const VertexMatrix& wi, const PolygonState& si,
                      int j, const VertexMatrix& wj,
                      const PolygonState& sj) const {
    // i < j by construction; argument order fixed by index.
    return overlap_measure(inst_->polygons[i], si.position(), wi,
                           inst_->polygons[j], sj.position(), wj);
  }

  // Row-major ordered-pair sum; row/column `replaced` (if >= 0) is taken
  // from prop_row_ instead of the matrix.
  double ordered_sum(const Eigen::MatrixXd& m, int replaced) const {
    double s = 0.0;
    for (int a = 0; a < k_; ++a) {
      for (int b = 0; b < k_; ++b) {
        if (a == b) continue;
        double v;
        if (a == replaced) {
          v = prop_row_[b];
        } else if (b == replaced) {
          v = prop_row_[a];
        } else {
          v = m(a, b);
        }
        s += v;
      }
    }
    return s;
  }

  // Center of mass and layout radius over the cached worlds, with polygon
  // `moved` (if >= 0) taken from its proposed placement.
  double layout_radius_cached(int moved, const PolygonState& cand) const {
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < k_; ++i) {
      const PolygonState& si = (i == moved) ? cand : states_[i];
      mx += mass_[i] * si.x;
      my += mass_[i] * si.y;
    }
    const Point com(mx / total_mass_, my / total_mass_);
    double r = 0.0;
    for (int i = 0; i < k_; ++i) {
      const VertexMatrix& w = (i == moved) ? scratch_[i] : world_[i];
      r = std::max(r, max_distance(w, com));
    }
    return r;
  }

  const Instance* inst_;
  EnergyWeights w_;
  int k_;
  Layout states_;
  std::vector<double> mass_;
  double total_mass_ = 0.0;
  std::vector<VertexMatrix> world_;
  std::vector<VertexMatrix> scratch_;
  Eigen::MatrixXd pairm_;
  std::vector<double> prop_row_;
  int prop_j_ = -1;
  PolygonState prop_state_;
  double prop_ove_ = 0.0;
  double prop_radius_ = 0.0;
  double prop_f_ = 0.0;
  double ove_ = 0.0;
  double radius_ = 0.0;
  double f_ = 0.0;
};

}  // namespace

AnnealConfig default_config(const Instance& inst) {
  AnnealConfig cfg;
  cfg.imax = 20000LL * inst.size();
  cfg.cmax = 100LL * inst.size();
  cfg.t0 = 100.0;
  cfg.cool = 0.95;
  cfg.emax = 0.0;
  cfg.weights = EnergyWeights{100.0, 100.0};
  cfg.seed = 1;
  return cfg;
}

double neighborhood_scale(int64_t i, int64_t imax) {
  return static_cast<double>(imax) /
             (static_cast<double>(i) - 2.0 * static_cast<double>(imax)) +
         1.05;
}

PolygonState perturb_state(const PolygonState& st, double scale, double r0,
                           PerturbMode mode, SplitMix64& rng) {
  const double u1 = rng.next_symmetric();
  const double u2 = rng.next_symmetric();
  const double u3 = rng.next_symmetric();
  PolygonState out;
  if (mode == PerturbMode::kDelta) {
    out.x = st.x + scale * r0 * u1;
    out.y = st.y + scale * r0 * u2;
    out.alpha = wrap_angle(st.alpha + scale * std::numbers::pi * u3);
  } else {
    out.x = scale * r0 * u1;
    out.y = scale * r0 * u2;
    out.alpha = wrap_angle(scale * std::numbers::pi * u3);
  }
  return out;
}

Layout perturb(const Layout& layout, int j, double scale, double r0,
               PerturbMode mode, SplitMix64& rng) {
  if (j < 0 || j >= static_cast<int>(layout.size())) {
    throw std::invalid_argument("perturb: polygon index out of range");
  }
  Layout out = layout;
  out[j] = perturb_state(layout[j], scale, r0, mode, rng);
  return out;
}

bool accept_move(double delta_e, double t, SplitMix64& rng) {
  if (delta_e < 0.0) return true;
  return rng.next_unit() < std::exp(-delta_e / t);
}

Layout random_initial_layout(const Instance& inst, double r0,
                             SplitMix64& rng) {
  Layout layout(inst.size());
  for (auto& st : layout) {
    st.x = rng.uniform(-r0, r0);
    st.y = rng.uniform(-r0, r0);
    st.alpha = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return layout;
}

double temperature_at(int64_t i, const AnnealConfig& cfg) {
  const int64_t coolings = (i + 1) / cfg.cmax;
  double t = cfg.t0;
  for (int64_t c = 0; c < coolings; ++c) t *= cfg.cool;
  return t;
}

SolveReport anneal(const Instance& inst, const AnnealConfig& cfg,
                   const StepObserver& observer) {
  validate_config(inst, cfg);
  const auto start = std::chrono::steady_clock::now();

  SplitMix64 rng(cfg.seed);
  const int k = inst.size();
  const double r0 = inst.initial_radius;

  LayoutScorer scorer(inst, cfg.weights, random_initial_layout(inst, r0, rng));

  double t = cfg.t0;
  double best_f = scorer.energy_value();
  Layout best = scorer.states();

  SolveReport rep;
  rep.seed = cfg.seed;
  if (cfg.trace_stride > 0) {
    rep.energy_trace.emplace_back(0, scorer.energy_value());
  }

  int64_t i = 0;
  while (i < cfg.imax && scorer.energy_value() > cfg.emax) {
    const int j = static_cast<int>(i % k);
    const double scale = neighborhood_scale(i, cfg.imax);
    const PolygonState cand =
        perturb_state(scorer.states()[j], scale, r0, cfg.mode, rng);
    const double f_new = scorer.propose(j, cand);
    const double delta = f_new - scorer.energy_value();
    const bool accepted = accept_move(delta, t, rng);
    if (accepted) scorer.commit();
    if (scorer.energy_value() < best_f) {
      best_f = scorer.energy_value();
      best = scorer.states();
    }
    const double t_used = t;
    if (i % cfg.cmax == cfg.cmax - 1) t *= cfg.cool;
    if (observer) {
      observer(StepInfo{i, t_used, t, scorer.energy_value(), best_f, delta,
                        accepted});
    }
    ++i;
    if (cfg.trace_stride > 0 &&
        (i % cfg.trace_stride == 0 || i == cfg.imax)) {
      rep.energy_trace.emplace_back(i, scorer.energy_value());
    }
  }
  if (cfg.trace_stride > 0 && rep.energy_trace.back().first != i) {
    rep.energy_trace.emplace_back(i, scorer.energy_value());
  }

  rep.best_layout = std::move(best);
  rep.best_energy = energy(inst, rep.best_layout, cfg.weights);
  rep.best_radius = layout_radius(inst, rep.best_layout);
  const ValidationReport audit = validate_solution(inst, rep.best_layout);
  rep.feasible = audit.feasible;
  rep.max_pair_overlap = audit.max_pair_overlap;
  rep.iterations_used = i;
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

CampaignResult run_campaign(const Instance& inst, const AnnealConfig& cfg,
                            int n_runs, int jobs) {
  if (n_runs < 1) throw std::invalid_argument("n_runs must be >= 1");
  validate_config(inst, cfg);
  jobs = std::max(1, std::min(jobs, n_runs));

  CampaignResult result;
  result.runs.resize(n_runs);

  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto worker = [&]() {
    for (;;) {
      const int idx = next.fetch_add(1);
      if (idx >= n_runs) break;
      try {
        AnnealConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + static_cast<uint64_t>(idx);
        result.runs[idx] = anneal(inst, run_cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  CampaignStats& st = result.stats;
  st.runs = n_runs;
  st.r_best = result.runs[0].best_radius;
  st.best_run = 0;
  double sum = 0.0, sum_t = 0.0;
  for (int i = 0; i < n_runs; ++i) {
    const double r = result.runs[i].best_radius;
    if (r < st.r_best) {
      st.r_best = r;
      st.best_run = i;
    }
    sum += r;
    sum_t += result.runs[i].wall_time_s;
  }
  st.r_mean = sum / n_runs;
  double var = 0.0;
  for (int i = 0; i < n_runs; ++i) {
    const double d = result.runs[i].best_radius - st.r_mean;
    var += d * d;
  }
  st.r_variance = var / n_runs;
  st.mean_time_s = sum_t / n_runs;
  return result;
}

}  // namespace wpack
