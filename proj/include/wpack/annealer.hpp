#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wpack/model.hpp"

namespace wpack {

/// Seedable, portable 64-bit generator (splitmix64). A campaign run with
/// index r draws from SplitMix64 seeded with master_seed + r; a fixed seed
/// reproduces the exact stream on any platform.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }
};

/// How a perturbation is applied to the selected polygon.
enum class PerturbMode {
  kDelta,     // offset added to the current state (default)
  kAbsolute,  // state redrawn inside the shrinking window around the origin
};

struct AnnealConfig {
  int64_t imax = 0;        // iteration budget
  int64_t cmax = 0;        // cooling period
  double t0 = 100.0;       // initial temperature
  double cool = 0.95;      // geometric cooling factor d, 0 < d < 1
  double emax = 0.0;       // stop when the energy drops to this value
  EnergyWeights weights;
  uint64_t seed = 1;
  PerturbMode mode = PerturbMode::kDelta;
  int64_t trace_stride = 0;  // 0 disables the energy trace
};

/// Reference parameters: imax = 20000 k, cmax = 100 k, t0 = 100,
/// lambda1 = lambda2 = 100.
AnnealConfig default_config(const Instance& inst);

struct SolveReport {
  Layout best_layout;
  double best_radius = 0.0;
  double best_energy = 0.0;
  bool feasible = false;
  int64_t iterations_used = 0;
  double wall_time_s = 0.0;
  double max_pair_overlap = 0.0;
  uint64_t seed = 0;  // seed this run actually used
  std::vector<std::pair<int64_t, double>> energy_trace;
};

struct CampaignStats {
  int runs = 0;
  double r_best = 0.0;
  double r_mean = 0.0;
  double r_variance = 0.0;  // population variance
  double mean_time_s = 0.0;
  int best_run = 0;  // lowest index among ties
};

struct CampaignResult {
  CampaignStats stats;
  std::vector<SolveReport> runs;
};

/// Window factor imax/(i - 2 imax) + 1.05: 0.55 at i = 0, shrinking to 0.05
/// at i = imax, strictly decreasing.
double neighborhood_scale(int64_t i, int64_t imax);

/// New state for one polygon. Delta mode adds scale*R0*u to each coordinate
/// and scale*pi*u to the angle (u uniform on (-1,1), drawn as x, y, alpha);
/// absolute mode redraws the state in the same window around the origin.
/// Angles are wrapped to [0, 2pi).
PolygonState perturb_state(const PolygonState& st, double scale, double r0,
                           PerturbMode mode, SplitMix64& rng);

/// Copy of the layout with only polygon j perturbed.
Layout perturb(const Layout& layout, int j, double scale, double r0,
               PerturbMode mode, SplitMix64& rng);

/// Metropolis rule: always accept improvements; accept an uphill move of
/// delta_e >= 0 with probability exp(-delta_e / t).
bool accept_move(double delta_e, double t, SplitMix64& rng);

/// Positions uniform on (-R0, R0), angles uniform on [0, 2pi). Overlaps are
/// permitted; the energy drives them out.
Layout random_initial_layout(const Instance& inst, double r0, SplitMix64& rng);

/// Temperature after iteration i: t0 * d^floor((i+1)/cmax), evaluated by
/// repeated multiplication exactly as the solver applies it.
double temperature_at(int64_t i, const AnnealConfig& cfg);

/// Per-iteration observation hook for tests and instrumentation.
struct StepInfo {
  int64_t iter = 0;
  double temperature = 0.0;        // temperature used by this step
  double temperature_after = 0.0;  // after any cooling at this step
  double current_energy = 0.0;
  double best_energy = 0.0;
  double delta_e = 0.0;
  bool accepted = false;
};
using StepObserver = std::function<void(const StepInfo&)>;

/// Run the annealing loop on one instance and return the best layout ever
/// visited, re-scored at report time.
SolveReport anneal(const Instance& inst, const AnnealConfig& cfg,
                   const StepObserver& observer = {});

/// n_runs independent runs with seeds cfg.seed + run index; jobs > 1 runs
/// them on a worker pool (results are identical either way). r_best ties
/// resolve to the lowest run index.
CampaignResult run_campaign(const Instance& inst, const AnnealConfig& cfg,
                            int n_runs, int jobs = 1);

}  // namespace wpack
