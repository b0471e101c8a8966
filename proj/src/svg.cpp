#include "wpack/svg.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "wpack/errors.hpp"

namespace wpack {

namespace {

std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void render_svg(const Instance& inst, const Layout& layout,
                std::ostream& out) {
  const Point com = center_of_mass(inst, layout);
  const double radius = layout_radius(inst, layout);
  const double margin = radius * 0.08;
  const double x0 = com.x() - radius - margin;
  const double y0 = com.y() - radius - margin;
  const double side = 2.0 * (radius + margin);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\""
      << fixed6(x0) << " " << fixed6(y0) << " " << fixed6(side) << " "
      << fixed6(side) << "\">\n";
  out << "  <circle cx=\"" << fixed6(com.x()) << "\" cy=\"" << fixed6(com.y())
      << "\" r=\"" << fixed6(radius)
      << "\" fill=\"#f7f7f7\" stroke=\"#444444\" stroke-width=\""
      << fixed6(radius * 0.005) << "\"/>\n";
  for (int i = 0; i < inst.size(); ++i) {
    const VertexMatrix w = world_vertices(inst.polygons[i], layout[i]);
    out << "  <path d=\"M " << fixed6(w(0, 0)) << " " << fixed6(w(1, 0));
    for (int v = 1; v < w.cols(); ++v) {
      out << " L " << fixed6(w(0, v)) << " " << fixed6(w(1, v));
    }
    out << " Z\" fill=\"hsl(" << (i * 47) % 360
        << ",60%,70%)\" fill-opacity=\"0.85\" stroke=\"#222222\" "
           "stroke-width=\""
        << fixed6(radius * 0.004) << "\"/>\n";
  }
  const double tick = radius * 0.04;
  out << "  <line x1=\"" << fixed6(com.x() - tick) << "\" y1=\""
      << fixed6(com.y()) << "\" x2=\"" << fixed6(com.x() + tick) << "\" y2=\""
      << fixed6(com.y()) << "\" stroke=\"#000000\" stroke-width=\""
      << fixed6(radius * 0.006) << "\"/>\n";
  out << "  <line x1=\"" << fixed6(com.x()) << "\" y1=\""
      << fixed6(com.y() - tick) << "\" x2=\"" << fixed6(com.x()) << "\" y2=\""
      << fixed6(com.y() + tick) << "\" stroke=\"#000000\" stroke-width=\""
      << fixed6(radius * 0.006) << "\"/>\n";
  out << "</svg>\n";
}

void render_svg(const Instance& inst, const Layout& layout,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  render_svg(inst, layout, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace wpack
