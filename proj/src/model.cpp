#include "wpack/model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace wpack {

void validate_instance(const Instance& inst) {
  if (inst.polygons.empty()) {
    throw std::invalid_argument("instance '" + inst.name +
                                "' has no polygons");
  }
  if (!std::isfinite(inst.initial_radius) || inst.initial_radius <= 0.0) {
    throw std::invalid_argument("instance '" + inst.name +
                                "': R0 must be positive");
  }
  double rmax = 0.0;
  for (const auto& p : inst.polygons) rmax = std::max(rmax, p.radius());
  if (inst.initial_radius < rmax) {
    throw std::invalid_argument(
        "instance '" + inst.name +
        "': R0 smaller than the largest polygon radius");
  }
  if (inst.known_optimum && !(*inst.known_optimum > 0.0)) {
    throw std::invalid_argument("instance '" + inst.name +
                                "': known optimum must be positive");
  }
}

static void check_layout(const Instance& inst, const Layout& layout) {
  if (static_cast<int>(layout.size()) != inst.size()) {
    throw std::invalid_argument("layout size " +
                                std::to_string(layout.size()) +
                                " does not match instance k=" +
                                std::to_string(inst.size()));
  }
}

Point center_of_mass(const Instance& inst, const Layout& layout) {
  check_layout(inst, layout);
  double mx = 0.0, my = 0.0, m = 0.0;
  for (int i = 0; i < inst.size(); ++i) {
    const double mi = inst.polygons[i].mass();
    mx += mi * layout[i].x;
    my += mi * layout[i].y;
    m += mi;
  }
  return {mx / m, my / m};
}

double layout_radius(const Instance& inst, const Layout& layout) {
  const Point com = center_of_mass(inst, layout);
  double r = 0.0;
  for (int i = 0; i < inst.size(); ++i) {
    r = std::max(r, max_distance(world_vertices(inst.polygons[i], layout[i]),
                                 com));
  }
  return r;
}

double layout_overlap(const Instance& inst, const Layout& layout) {
  check_layout(inst, layout);
  const int k = inst.size();
  if (k < 2) return 0.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      m(i, j) = m(j, i) = overlap_measure(inst.polygons[i], layout[i],
                                          inst.polygons[j], layout[j]);
    }
  }
  // Ordered-pair sum: every unordered pair counts twice.
  double s = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (j != i) s += m(i, j);
    }
  }
  return s;
}

double energy(const Instance& inst, const Layout& layout,
              const EnergyWeights& w) {
  return combine_energy(w, layout_overlap(inst, layout),
                        layout_radius(inst, layout));
}

ValidationReport validate_solution(const Instance& inst, const Layout& layout,
                                   double area_tol) {
  check_layout(inst, layout);
  const int k = inst.size();
  std::vector<VertexMatrix> world(k);
  for (int i = 0; i < k; ++i) {
    world[i] = world_vertices(inst.polygons[i], layout[i]);
  }
  ValidationReport rep;
  rep.feasible = true;
  rep.radius = layout_radius(inst, layout);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (polygons_interior_overlap(inst.polygons[i], world[i],
                                    inst.polygons[j], world[j],
                                    kOrientationEps, area_tol)) {
        rep.feasible = false;
        const double d = (layout[i].position() - layout[j].position()).norm();
        const double m =
            std::max(0.0, inst.polygons[i].radius() +
                              inst.polygons[j].radius() - d);
        rep.max_pair_overlap = std::max(rep.max_pair_overlap, m);
      }
    }
  }
  return rep;
}

}  // namespace wpack
