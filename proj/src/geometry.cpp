#include "wpack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wpack {

namespace {

// Twice the signed area (positive for CCW winding).
double signed_area2(const VertexMatrix& p) {
  const int n = static_cast<int>(p.cols());
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    s += cross2(p.col(i), p.col((i + 1) % n));
  }
  return s;
}

bool within_box(const Point& p, const Point& a, const Point& b, double eps) {
  return std::min(a.x(), b.x()) - eps <= p.x() &&
         p.x() <= std::max(a.x(), b.x()) + eps &&
         std::min(a.y(), b.y()) - eps <= p.y() &&
         p.y() <= std::max(a.y(), b.y()) + eps;
}

bool point_in_triangle_closed(const Point& p, const Point& a, const Point& b,
                              const Point& c, double eps) {
  // a, b, c in CCW order.
  return cross2(b - a, p - a) >= -eps && cross2(c - b, p - b) >= -eps &&
         cross2(a - c, p - c) >= -eps;
}

// Ear clipping for a simple polygon. Emits CCW index triples into pts.
std::vector<std::array<int, 3>> ear_clip(const VertexMatrix& pts, double eps) {
  const int n = static_cast<int>(pts.cols());
  std::vector<int> ring(n);
  std::iota(ring.begin(), ring.end(), 0);
  if (signed_area2(pts) < 0.0) std::reverse(ring.begin(), ring.end());

  std::vector<std::array<int, 3>> tris;
  tris.reserve(n - 2);
  while (ring.size() > 3) {
    const int m = static_cast<int>(ring.size());
    bool clipped = false;
    for (int c = 0; c < m && !clipped; ++c) {
      const int ia = ring[(c + m - 1) % m];
      const int ib = ring[c];
      const int ic = ring[(c + 1) % m];
      const Point a = pts.col(ia), b = pts.col(ib), d = pts.col(ic);
      if (cross2(b - a, d - b) <= eps) continue;  // reflex corner
      bool ear = true;
      for (int other : ring) {
        if (other == ia || other == ib || other == ic) continue;
        if (point_in_triangle_closed(pts.col(other), a, b, d, eps)) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      tris.push_back({ia, ib, ic});
      ring.erase(ring.begin() + c);
      clipped = true;
    }
    if (!clipped) {
      // Numeric corner case: clip the most convex corner and keep going.
      int best = 0;
      double best_cross = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < m; ++c) {
        const Point a = pts.col(ring[(c + m - 1) % m]);
        const Point b = pts.col(ring[c]);
        const Point d = pts.col(ring[(c + 1) % m]);
        const double cr = cross2(b - a, d - b);
        if (cr > best_cross) {
          best_cross = cr;
          best = c;
        }
      }
      tris.push_back({ring[(best + m - 1) % m], ring[best], ring[(best + 1) % m]});
      ring.erase(ring.begin() + best);
    }
  }
  tris.push_back({ring[0], ring[1], ring[2]});
  return tris;
}

// Area of the intersection of two triangles, Sutherland-Hodgman clip of ta
// against the CCW triangle tb.
double tri_intersection_area(const std::array<Point, 3>& ta,
                             const std::array<Point, 3>& tb) {
  std::array<Point, 16> poly;
  std::array<Point, 16> next;
  int n = 3;
  for (int i = 0; i < 3; ++i) poly[i] = ta[i];
  for (int e = 0; e < 3 && n > 0; ++e) {
    const Point c1 = tb[e];
    const Point dir = tb[(e + 1) % 3] - c1;
    int m = 0;
    for (int i = 0; i < n; ++i) {
      const Point& cur = poly[i];
      const Point& nxt = poly[(i + 1) % n];
      const double dc = cross2(dir, cur - c1);
      const double dn = cross2(dir, nxt - c1);
      const bool cin = dc >= 0.0;
      const bool nin = dn >= 0.0;
      if (cin) next[m++] = cur;
      if (cin != nin) next[m++] = cur + (dc / (dc - dn)) * (nxt - cur);
    }
    n = m;
    for (int i = 0; i < n; ++i) poly[i] = next[i];
  }
  if (n < 3) return 0.0;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += cross2(poly[i], poly[(i + 1) % n]);
  return std::abs(s) * 0.5;
}

}  // namespace

PolygonStructure::PolygonStructure(double mass, std::vector<PolarVertex> vertices)
    : mass_(mass), polar_(std::move(vertices)) {
  const int n = vertex_count();
  if (n < 3) {
    throw std::invalid_argument("polygon needs at least 3 vertices, got " +
                                std::to_string(n));
  }
  if (!std::isfinite(mass_) || mass_ <= 0.0) {
    throw std::invalid_argument("polygon mass must be positive and finite");
  }
  local_.resize(2, n);
  radius_ = 0.0;
  for (int i = 0; i < n; ++i) {
    const PolarVertex& v = polar_[i];
    if (!std::isfinite(v.r) || !std::isfinite(v.theta) || v.r < 0.0) {
      throw std::invalid_argument("vertex " + std::to_string(i) +
                                  ": r must be finite and >= 0, theta finite");
    }
    local_.col(i) = Point(v.r * std::cos(v.theta), v.r * std::sin(v.theta));
    radius_ = std::max(radius_, v.r);
  }

  const double scale = std::max(1.0, radius_);
  const double eps = kOrientationEps * scale * scale;

  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if ((local_.col(i) - local_.col(j)).norm() <= 1e-12 * scale) {
      throw std::invalid_argument("vertices " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
    }
  }
  for (int i = 0; i < n; ++i) {
    const Point a = local_.col(i);
    const Point b = local_.col((i + 1) % n);
    const Point c = local_.col((i + 2) % n);
    if (std::abs(cross2(b - a, c - b)) <= eps) {
      throw std::invalid_argument("collinear vertex triple starting at index " +
                                  std::to_string(i));
    }
  }
  // Simplicity: no two non-adjacent edges may intersect.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(local_.col(i), local_.col((i + 1) % n),
                             local_.col(j), local_.col((j + 1) % n), eps)) {
        throw std::invalid_argument("polygon is self-intersecting (edges " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j) + ")");
      }
    }
  }
  area_ = std::abs(signed_area2(local_)) * 0.5;
  tris_ = ear_clip(local_, eps);
}

VertexMatrix world_vertices(const PolygonStructure& s, const PolygonState& st) {
  VertexMatrix out;
  world_vertices_into(s, st, out);
  return out;
}

void world_vertices_into(const PolygonStructure& s, const PolygonState& st,
                         VertexMatrix& out) {
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(st.alpha).toRotationMatrix();
  out.resize(2, s.vertex_count());
  out.noalias() = rot * s.local_vertices();
  out.colwise() += st.position();
}

bool point_on_segment(const Point& p, const Point& a, const Point& b,
                      double eps) {
  if (std::abs(cross2(b - a, p - a)) > eps) return false;
  return within_box(p, a, b, eps);
}

bool segments_intersect(const Point& a1, const Point& a2, const Point& b1,
                        const Point& b2, double eps) {
  const double d1 = cross2(a2 - a1, b1 - a1);
  const double d2 = cross2(a2 - a1, b2 - a1);
  const double d3 = cross2(b2 - b1, a1 - b1);
  const double d4 = cross2(b2 - b1, a2 - b1);
  const int s1 = sign_eps(d1, eps);
  const int s2 = sign_eps(d2, eps);
  const int s3 = sign_eps(d3, eps);
  const int s4 = sign_eps(d4, eps);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;
  if (s1 == 0 && within_box(b1, a1, a2, eps)) return true;
  if (s2 == 0 && within_box(b2, a1, a2, eps)) return true;
  if (s3 == 0 && within_box(a1, b1, b2, eps)) return true;
  if (s4 == 0 && within_box(a2, b1, b2, eps)) return true;
  return false;
}

bool segments_cross_properly(const Point& a1, const Point& a2, const Point& b1,
                             const Point& b2, double eps) {
  const int s1 = sign_eps(cross2(a2 - a1, b1 - a1), eps);
  const int s2 = sign_eps(cross2(a2 - a1, b2 - a1), eps);
  const int s3 = sign_eps(cross2(b2 - b1, a1 - b1), eps);
  const int s4 = sign_eps(cross2(b2 - b1, a2 - b1), eps);
  return s1 * s2 < 0 && s3 * s4 < 0;
}

bool point_on_polygon_boundary(const Point& p, const VertexMatrix& poly,
                               double eps) {
  const int n = static_cast<int>(poly.cols());
  for (int i = 0; i < n; ++i) {
    if (point_on_segment(p, poly.col(i), poly.col((i + 1) % n), eps)) {
      return true;
    }
  }
  return false;
}

namespace {

// Ray-crossing parity, boundary handled by the callers.
bool crossing_parity(const Point& p, const VertexMatrix& poly) {
  const int n = static_cast<int>(poly.cols());
  bool in = false;
  for (int i = 0; i < n; ++i) {
    const Point a = poly.col(i);
    const Point b = poly.col((i + 1) % n);
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double xint =
          a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < xint) in = !in;
    }
  }
  return in;
}

}  // namespace

bool point_in_polygon(const Point& p, const VertexMatrix& poly, double eps) {
  if (point_on_polygon_boundary(p, poly, eps)) return true;
  return crossing_parity(p, poly);
}

bool point_strictly_inside(const Point& p, const VertexMatrix& poly,
                           double eps) {
  if (point_on_polygon_boundary(p, poly, eps)) return false;
  return crossing_parity(p, poly);
}

double polygon_area(const VertexMatrix& poly) {
  return std::abs(signed_area2(poly)) * 0.5;
}

bool polygons_overlap(const VertexMatrix& a, const VertexMatrix& b,
                      double eps) {
  const int na = static_cast<int>(a.cols());
  const int nb = static_cast<int>(b.cols());
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (segments_intersect(a.col(i), a.col((i + 1) % na), b.col(j),
                             b.col((j + 1) % nb), eps)) {
        return true;
      }
    }
  }
  // No boundary contact: overlap is possible only by full containment.
  if (point_in_polygon(a.col(0), b, eps)) return true;
  if (point_in_polygon(b.col(0), a, eps)) return true;
  return false;
}

bool polygons_overlap(const PolygonStructure& sa, const PolygonState& sta,
                      const PolygonStructure& sb, const PolygonState& stb,
                      double eps) {
  return polygons_overlap(world_vertices(sa, sta), world_vertices(sb, stb), eps);
}

bool polygons_interior_overlap(const PolygonStructure& sa,
                               const VertexMatrix& wa,
                               const PolygonStructure& sb,
                               const VertexMatrix& wb, double eps,
                               double area_tol) {
  const int na = static_cast<int>(wa.cols());
  const int nb = static_cast<int>(wb.cols());
  bool touch = false;
  for (int i = 0; i < na; ++i) {
    const Point a1 = wa.col(i);
    const Point a2 = wa.col((i + 1) % na);
    for (int j = 0; j < nb; ++j) {
      const Point b1 = wb.col(j);
      const Point b2 = wb.col((j + 1) % nb);
      const int s1 = sign_eps(cross2(a2 - a1, b1 - a1), eps);
      const int s2 = sign_eps(cross2(a2 - a1, b2 - a1), eps);
      const int s3 = sign_eps(cross2(b2 - b1, a1 - b1), eps);
      const int s4 = sign_eps(cross2(b2 - b1, a2 - b1), eps);
      if (s1 * s2 < 0 && s3 * s4 < 0) return true;  // transversal crossing
      if (!touch) {
        touch = (s1 == 0 && within_box(b1, a1, a2, eps)) ||
                (s2 == 0 && within_box(b2, a1, a2, eps)) ||
                (s3 == 0 && within_box(a1, b1, b2, eps)) ||
                (s4 == 0 && within_box(a2, b1, b2, eps));
      }
    }
  }
  for (int i = 0; i < na; ++i) {
    if (point_strictly_inside(wa.col(i), wb, eps)) return true;
  }
  for (int j = 0; j < nb; ++j) {
    if (point_strictly_inside(wb.col(j), wa, eps)) return true;
  }
  if (!touch) return false;
  // Contact without a strict certificate (shared edges, vertex-on-edge,
  // coincident boundaries): decide by the actual shared area.
  const double amin = std::min(sa.area(), sb.area());
  return intersection_area(sa, wa, sb, wb) > area_tol * amin;
}

bool polygons_interior_overlap(const PolygonStructure& sa,
                               const PolygonState& sta,
                               const PolygonStructure& sb,
                               const PolygonState& stb, double eps,
                               double area_tol) {
  return polygons_interior_overlap(sa, world_vertices(sa, sta), sb,
                                   world_vertices(sb, stb), eps, area_tol);
}

double intersection_area(const PolygonStructure& sa, const VertexMatrix& wa,
                         const PolygonStructure& sb, const VertexMatrix& wb) {
  double total = 0.0;
  std::array<Point, 3> ta;
  std::array<Point, 3> tb;
  for (const auto& ia : sa.triangles()) {
    for (int v = 0; v < 3; ++v) ta[v] = wa.col(ia[v]);
    for (const auto& ib : sb.triangles()) {
      for (int v = 0; v < 3; ++v) tb[v] = wb.col(ib[v]);
      if (cross2(tb[1] - tb[0], tb[2] - tb[0]) < 0.0) {
        std::swap(tb[1], tb[2]);
      }
      total += tri_intersection_area(ta, tb);
    }
  }
  return total;
}

double overlap_measure(const PolygonStructure& sa, const Point& ca,
                       const VertexMatrix& wa, const PolygonStructure& sb,
                       const Point& cb, const VertexMatrix& wb, double eps) {
  const double d = (ca - cb).norm();
  const double rr = sa.radius() + sb.radius();
  if (d >= rr) return 0.0;  // covering circles disjoint, measure is 0 anyway
  if (!polygons_interior_overlap(sa, wa, sb, wb, eps)) return 0.0;
  return std::max(0.0, rr - d);
}

double overlap_measure(const PolygonStructure& sa, const PolygonState& sta,
                       const PolygonStructure& sb, const PolygonState& stb,
                       double eps) {
  return overlap_measure(sa, sta.position(), world_vertices(sa, sta), sb,
                         stb.position(), world_vertices(sb, stb), eps);
}

double max_distance(const VertexMatrix& w, const Point& c) {
  double best = 0.0;
  const int n = static_cast<int>(w.cols());
  for (int i = 0; i < n; ++i) {
    const double dx = w(0, i) - c.x();
    const double dy = w(1, i) - c.y();
    const double sq = dx * dx + dy * dy;
    if (sq > best) best = sq;
  }
  return std::sqrt(best);
}

}  // namespace wpack
