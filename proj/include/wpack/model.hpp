#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpack/geometry.hpp"

namespace wpack {

/// The search point: one state per polygon, in instance order.
using Layout = std::vector<PolygonState>;

/// A named problem: shapes plus the initial container radius R0.
struct Instance {
  std::string name;
  std::vector<PolygonStructure> polygons;
  double initial_radius = 0.0;
  std::optional<double> known_optimum;
  /// Free-form provenance remarks, written as comments when saved.
  std::string note;

  int size() const { return static_cast<int>(polygons.size()); }
};

/// Throws std::invalid_argument unless k >= 1, R0 > 0 and R0 covers every
/// polygon individually (R0 >= max r(i)).
void validate_instance(const Instance& inst);

/// Penalty weights of the scalar objective.
struct EnergyWeights {
  double lambda1 = 100.0;  // overlap weight
  double lambda2 = 100.0;  // radius weight
};

inline double combine_energy(const EnergyWeights& w, double overlap,
                             double radius) {
  return w.lambda1 * overlap + w.lambda2 * radius;
}

/// Mass-weighted mean of the polygon centers.
Point center_of_mass(const Instance& inst, const Layout& layout);

/// Largest distance from the layout's center of mass to any world vertex.
/// The container is centered at the center of mass, so this is the minimal
/// balanced container radius.
double layout_radius(const Instance& inst, const Layout& layout);

/// Sum of the pairwise overlap measures over ordered pairs i != j (each
/// unordered pair counts twice).
double layout_overlap(const Instance& inst, const Layout& layout);

/// lambda1 * layout_overlap + lambda2 * layout_radius.
double energy(const Instance& inst, const Layout& layout,
              const EnergyWeights& w);

struct ValidationReport {
  bool feasible = false;        // no pair has interior overlap
  double radius = 0.0;          // layout_radius
  double max_pair_overlap = 0;  // largest circle measure among offending pairs
};

/// Feasibility audit with the geometric interior-overlap test (not the
/// circle measure). area_tol is the relative shared-area tolerance below
/// which contact counts as touching.
ValidationReport validate_solution(const Instance& inst, const Layout& layout,
                                   double area_tol = kAreaEpsRel);

}  // namespace wpack
