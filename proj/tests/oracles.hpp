#pragma once

// Test-only brute-force oracles and random shape generators. Deliberately
// independent of the library geometry: textbook ray crossing on plain
// structs, dense grid sampling, Monte-Carlo areas.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wpack/geometry.hpp"

namespace oracle {

struct Pt {
  double x, y;
};

struct Box {
  double xmin, ymin, xmax, ymax;
};

inline std::vector<Pt> to_points(const wpack::VertexMatrix& m) {
  std::vector<Pt> out;
  out.reserve(m.cols());
  for (int i = 0; i < m.cols(); ++i) out.push_back({m(0, i), m(1, i)});
  return out;
}

inline Box bounding_box(const std::vector<Pt>& poly) {
  Box b{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
  for (const auto& p : poly) {
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

// Textbook crossing-number test. Boundary behavior is unspecified; callers
// only probe generic points.
inline bool point_inside(const std::vector<Pt>& poly, Pt p) {
  bool in = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
      const double xint = (poly[j].x - poly[i].x) * (p.y - poly[i].y) /
                              (poly[j].y - poly[i].y) +
                          poly[i].x;
      if (p.x < xint) in = !in;
    }
  }
  return in;
}

// Dense-grid overlap oracle: rasterize each polygon's bounding box and look
// for a sample point inside both polygons. cell_diag reports the coarser of
// the two grids' cell diagonals.
inline bool grid_overlap(const std::vector<Pt>& a, const std::vector<Pt>& b,
                         int res, double* cell_diag = nullptr) {
  double diag = 0.0;
  bool found = false;
  for (int pass = 0; pass < 2 && !found; ++pass) {
    const auto& outer = pass == 0 ? a : b;
    const auto& other = pass == 0 ? b : a;
    const Box box = bounding_box(outer);
    const double dx = (box.xmax - box.xmin) / res;
    const double dy = (box.ymax - box.ymin) / res;
    diag = std::max(diag, std::hypot(dx, dy));
    for (int i = 0; i < res && !found; ++i) {
      for (int j = 0; j < res; ++j) {
        const Pt p{box.xmin + (i + 0.5) * dx, box.ymin + (j + 0.5) * dy};
        if (point_inside(outer, p) && point_inside(other, p)) {
          found = true;
          break;
        }
      }
    }
  }
  if (cell_diag) *cell_diag = diag;
  return found;
}

// Monte-Carlo shared-area estimate over the intersection of bounding boxes.
inline double mc_intersection_area(const std::vector<Pt>& a,
                                   const std::vector<Pt>& b, int samples,
                                   std::mt19937_64& rng) {
  const Box ba = bounding_box(a);
  const Box bb = bounding_box(b);
  const Box box{std::max(ba.xmin, bb.xmin), std::max(ba.ymin, bb.ymin),
                std::min(ba.xmax, bb.xmax), std::min(ba.ymax, bb.ymax)};
  if (box.xmin >= box.xmax || box.ymin >= box.ymax) return 0.0;
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
  std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    const Pt p{ux(rng), uy(rng)};
    if (point_inside(a, p) && point_inside(b, p)) ++hits;
  }
  return (box.xmax - box.xmin) * (box.ymax - box.ymin) * hits / samples;
}

// Random simple polygons as library structures: star-shaped (often
// nonconvex) or inscribed in a circle (convex).
inline wpack::PolygonStructure random_polygon(std::mt19937_64& rng,
                                              bool convex) {
  std::uniform_int_distribution<int> nd(3, 9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const int n = nd(rng);
    std::vector<double> angles(n);
    for (auto& a : angles) a = 2.0 * M_PI * u(rng);
    std::sort(angles.begin(), angles.end());
    bool spaced = true;
    for (int i = 1; i < n; ++i) {
      if (angles[i] - angles[i - 1] < 0.05) spaced = false;
    }
    if (angles.front() + 2.0 * M_PI - angles.back() < 0.05) spaced = false;
    if (!spaced) continue;
    std::vector<wpack::PolarVertex> vs;
    vs.reserve(n);
    for (int i = 0; i < n; ++i) {
      const double r = convex ? 1.0 + 0.0 * u(rng) : 0.4 + 1.1 * u(rng);
      vs.push_back({r, angles[i]});
    }
    try {
      return wpack::PolygonStructure(1.0, std::move(vs));
    } catch (const std::invalid_argument&) {
      continue;  // rare degenerate draw
    }
  }
}

}  // namespace oracle
