#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <vector>

namespace wpack {

using Point = Eigen::Vector2d;
/// Columns are vertices, in polygon order.
using VertexMatrix = Eigen::Matrix2Xd;

/// Absolute tolerance on cross-product signs in orientation tests.
/// Instances use unit-scale coordinates; pass a scaled value for other ranges.
inline constexpr double kOrientationEps = 1e-12;

/// Relative (to the smaller polygon area) tolerance below which a shared
/// region counts as boundary contact rather than interior overlap.
inline constexpr double kAreaEpsRel = 1e-9;

/// One vertex in polar coordinates about the polygon's center of mass.
struct PolarVertex {
  double r = 0.0;      // distance from the center of mass, r >= 0
  double theta = 0.0;  // radians, stored as given
};

/// Placement of a polygon: center-of-mass position plus rotation angle.
struct PolygonState {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;  // radians

  Point position() const { return {x, y}; }
};

/// Immutable shape + mass. Vertices are polar coordinates about the center
/// of mass; the traced polygon must be simple. Construction validates and
/// precomputes the covering radius, local Cartesian vertices, signed area
/// and a triangulation (used by the interior-overlap area fallback).
class PolygonStructure {
 public:
  PolygonStructure(double mass, std::vector<PolarVertex> vertices);

  int vertex_count() const { return static_cast<int>(polar_.size()); }
  double mass() const { return mass_; }
  const std::vector<PolarVertex>& polar_vertices() const { return polar_; }

  /// max of the r list; the circle of this radius about the center of mass
  /// covers the polygon.
  double radius() const { return radius_; }

  /// Cartesian vertices about the center of mass (state = identity).
  const VertexMatrix& local_vertices() const { return local_; }

  /// Unsigned area of the polygon.
  double area() const { return area_; }

  /// Triangulation as CCW index triples into the vertex list.
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }

 private:
  double mass_ = 0.0;
  std::vector<PolarVertex> polar_;
  VertexMatrix local_;
  double radius_ = 0.0;
  double area_ = 0.0;
  std::vector<std::array<int, 3>> tris_;
};

inline double polygon_radius(const PolygonStructure& s) { return s.radius(); }

/// z component of the 2D cross product.
inline double cross2(const Point& a, const Point& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Sign of v with a dead zone of +-eps.
inline int sign_eps(double v, double eps) {
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

/// World-space vertices of a placed polygon: rotate by alpha, translate
/// to (x, y). Column distances from (x, y) equal the r list up to rounding.
VertexMatrix world_vertices(const PolygonStructure& s, const PolygonState& st);

/// Same, writing into a caller-owned matrix (resized as needed).
void world_vertices_into(const PolygonStructure& s, const PolygonState& st,
                         VertexMatrix& out);

/// True iff p lies on the closed segment [a, b], within eps on the cross
/// product and coordinate boxes.
bool point_on_segment(const Point& p, const Point& a, const Point& b,
                      double eps = kOrientationEps);

/// Closed-segment intersection: shared endpooints, collinear overlap and
/// boundary touches all count.
bool segments_intersect(const Point& a1, const Point& a2, const Point& b1,
                        const Point& b2, double eps = kOrientationEps);

/// Strict transversal crossing: the segments cross at a single interior
/// point of both. Touches and collinear contact do not count.
bool segments_cross_properly(const Point& a1, const Point& a2, const Point& b1,
                             const Point& b2, double eps = kOrientationEps);

/// Point-in-polygon with boundary counting as inside. Ray crossing rule;
/// boundary membership decided first with point_on_segment.
bool point_in_polygon(const Point& p, const VertexMatrix& poly,
                      double eps = kOrientationEps);

/// True iff p is strictly interior (boundary excluded).
bool point_strictly_inside(const Point& p, const VertexMatrix& poly,
                           double eps = kOrientationEps);

/// True iff p lies on the polygon boundary within eps.
bool point_on_polygon_boundary(const Point& p, const VertexMatrix& poly,
                               double eps = kOrientationEps);

/// Unsigned shoelace area of a closed polygon given by columns.
double polygon_area(const VertexMatrix& poly);

/// Closed-set overlap predicate: true iff the polygons share at least one
/// point. Edge touches and shared boundaries count.
bool polygons_overlap(const VertexMatrix& a, const VertexMatrix& b,
                      double eps = kOrientationEps);
bool polygons_overlap(const PolygonStructure& sa, const PolygonState& sta,
                      const PolygonStructure& sb, const PolygonState& stb,
                      double eps = kOrientationEps);

/// Interior-overlap predicate: true iff the shared region has positive area.
/// Edge-adjacent and vertex-touching placements score false. Decided by
/// proper edge crossings and strict vertex containment where possible, with
/// a triangulated intersection-area fallback for contact-only arrangements.
bool polygons_interior_overlap(const PolygonStructure& sa,
                               const VertexMatrix& wa,
                               const PolygonStructure& sb,
                               const VertexMatrix& wb,
                               double eps = kOrientationEps,
                               double area_tol = kAreaEpsRel);
bool polygons_interior_overlap(const PolygonStructure& sa,
                               const PolygonState& sta,
                               const PolygonStructure& sb,
                               const PolygonState& stb,
                               double eps = kOrientationEps,
                               double area_tol = kAreaEpsRel);

/// Area of the intersection of two placed polygons, via the structures'
/// triangulations and pairwise convex clipping.
double intersection_area(const PolygonStructure& sa, const VertexMatrix& wa,
                         const PolygonStructure& sb, const VertexMatrix& wb);

/// Euclidean distance between the two centers of mass.
inline double center_distance(const PolygonState& a, const PolygonState& b) {
  return (a.position() - b.position()).norm();
}

/// Circle-based overlap measure: 0 when the interiors do not overlap,
/// otherwise max{0, r(a) + r(b) - dis(a, b)}, which jumps at first contact.
/// The world-vertex variant lets callers reuse cached transforms; arguments
/// must be passed in a fixed order for bit-reproducible sums (the layout
/// functions order them by polygon index).
double overlap_measure(const PolygonStructure& sa, const Point& ca,
                       const VertexMatrix& wa, const PolygonStructure& sb,
                       const Point& cb, const VertexMatrix& wb,
                       double eps = kOrientationEps);
double overlap_measure(const PolygonStructure& sa, const PolygonState& sta,
                       const PolygonStructure& sb, const PolygonState& stb,
                       double eps = kOrientationEps);

/// Largest distance from point c to any column of w.
double max_distance(const VertexMatrix& w, const Point& c);

}  // namespace wpack
