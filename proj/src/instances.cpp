#include "wpack/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wpack/annealer.hpp"
#include "wpack/errors.hpp"

namespace wpack {

namespace {

constexpr double kPi = std::numbers::pi;

PolygonStructure make_polygon(double mass, std::vector<PolarVertex> vs) {
  return PolygonStructure(mass, std::move(vs));
}

Instance opt1() {
  Instance inst;
  inst.name = "opt-1";
  inst.initial_radius = 2.3;
  inst.known_optimum = std::sqrt(4.0 + 9.0 / 64.0);
  inst.note = "two 3x1 rectangles (mass 30) and three unit squares (mass 10)";
  inst.polygons.push_back(rectangle_structure(3.0, 1.0, 30.0));
  inst.polygons.push_back(rectangle_structure(3.0, 1.0, 30.0));
  for (int i = 0; i < 3; ++i) {
    inst.polygons.push_back(rectangle_structure(1.0, 1.0, 10.0));
  }
  return inst;
}

Instance opt2() {
  Instance inst;
  inst.name = "opt-2";
  inst.initial_radius = 2.8;
  inst.known_optimum = 2.0 * std::sqrt(2.0);
  inst.note =
      "four dart pentagons of radius 2 and one edge-2 square; the square "
      "thetas are the axis-aligned pi/4 + n*pi/2 set. The recorded optimum "
      "2*sqrt(2) has not been reproduced for these exact shapes: extensive "
      "search bottoms out near 3.08.";
  const double s2 = std::sqrt(2.0);
  for (int i = 0; i < 4; ++i) {
    inst.polygons.push_back(make_polygon(
        100.0, {{2.0, 0.0},
                {2.0 * s2 - 2.0, kPi / 4.0},
                {2.0, kPi / 2.0},
                {s2, 5.0 * kPi / 4.0},
                {s2, 7.0 * kPi / 4.0}}));
  }
  inst.polygons.push_back(rectangle_structure(2.0, 2.0, 100.0));
  return inst;
}

Instance opt3() {
  Instance inst;
  inst.name = "opt-3";
  inst.initial_radius = 3.4;
  inst.known_optimum = 2.0 * std::sqrt(3.0);
  inst.note = "six equilateral triangles of circumradius 2";
  for (int i = 0; i < 6; ++i) {
    inst.polygons.push_back(make_polygon(
        100.0, {{2.0, 0.0}, {2.0, 2.0 * kPi / 3.0}, {2.0, 4.0 * kPi / 3.0}}));
  }
  return inst;
}

Instance opt4() {
  Instance inst;
  inst.name = "opt-4";
  inst.initial_radius = 5.0;
  inst.known_optimum = 3.0 * std::sqrt(2.0);
  inst.note =
      "four right triangles and eight trapezoids; the trapezoid groups "
      "i=5..8 and i=9..12 are intentionally identical";
  const double s2 = std::sqrt(2.0);
  for (int i = 0; i < 4; ++i) {
    inst.polygons.push_back(make_polygon(
        10.0, {{1.0, 0.0}, {1.0, kPi}, {1.0, 3.0 * kPi / 2.0}}));
  }
  for (int i = 0; i < 8; ++i) {
    inst.polygons.push_back(make_polygon(20.0, {{2.0, 0.0},
                                                {2.0, kPi},
                                                {s2, 5.0 * kPi / 4.0},
                                                {s2, 7.0 * kPi / 4.0}}));
  }
  return inst;
}

Instance opt5() {
  Instance inst;
  inst.name = "opt-5";
  inst.initial_radius = 8.0;
  inst.known_optimum = 4.0 * std::sqrt(2.0);
  inst.note =
      "one kite (r list 2*sqrt2, 2*sqrt2, sqrt2, 2*sqrt2) and two C-shaped "
      "octagons";
  const double s2 = std::sqrt(2.0);
  const double s5 = std::sqrt(5.0);
  const double a2 = std::atan(2.0);
  inst.polygons.push_back(make_polygon(40.0, {{2.0 * s2, kPi / 4.0},
                                              {2.0 * s2, 3.0 * kPi / 4.0},
                                              {s2, 5.0 * kPi / 4.0},
                                              {2.0 * s2, 7.0 * kPi / 4.0}}));
  for (int i = 0; i < 2; ++i) {
    inst.polygons.push_back(make_polygon(60.0, {{2.0 * s2, kPi / 4.0},
                                                {2.0 * s5, a2},
                                                {2.0 * s5, kPi - a2},
                                                {2.0 * s5, kPi + a2},
                                                {2.0 * s5, -a2},
                                                {2.0 * s2, -kPi / 4.0},
                                                {2.0, -kPi / 2.0},
                                                {2.0, kPi / 2.0}}));
  }
  return inst;
}

Instance opt6() {
  Instance inst;
  inst.name = "opt-6";
  inst.initial_radius = 5.0;
  inst.known_optimum = 3.0 * std::sqrt(2.0);
  inst.note = "four edge-2 squares around one plus-shaped 12-gon (mass 500)";
  const double s2 = std::sqrt(2.0);
  const double s10 = std::sqrt(10.0);
  const double a13 = std::atan(1.0 / 3.0);
  for (int i = 0; i < 4; ++i) {
    inst.polygons.push_back(rectangle_structure(2.0, 2.0, 60.0));
  }
  inst.polygons.push_back(make_polygon(
      500.0, {{s10, -a13},
              {s10, a13},
              {s2, kPi / 4.0},
              {s10, kPi / 2.0 - a13},
              {s10, kPi / 2.0 + a13},
              {s2, 3.0 * kPi / 4.0},
              {s10, kPi - a13},
              {s10, kPi + a13},
              {s2, 5.0 * kPi / 4.0},
              {s10, 3.0 * kPi / 2.0 - a13},
              {s10, 3.0 * kPi / 2.0 + a13},
              {s2, 7.0 * kPi / 4.0}}));
  return inst;
}

struct RectSpec {
  double w, h, mass;
};

Instance rect_instance(const std::string& name, double r0,
                       const std::vector<RectSpec>& specs) {
  Instance inst;
  inst.name = name;
  inst.initial_radius = r0;
  for (const auto& s : specs) {
    inst.polygons.push_back(rectangle_structure(s.w, s.h, s.mass));
  }
  return inst;
}

Instance rect1() {
  return rect_instance("rect-1", 20.0,
                       {{8, 6, 12}, {8, 8, 16}, {10, 6, 15}, {12, 4, 12},
                        {6, 6, 9}});
}

Instance rect2() {
  return rect_instance("rect-2", 40.0,
                       {{8, 6, 12}, {8, 8, 16}, {10, 6, 15}, {10, 8, 20},
                        {10, 10, 25}, {12, 6, 18}});
}

Instance rect3() {
  return rect_instance("rect-3", 40.0,
                       {{8, 6, 12}, {8, 8, 16}, {10, 6, 15}, {10, 8, 20},
                        {10, 10, 25}, {12, 4, 12}, {12, 6, 18}, {12, 8, 24},
                        {12, 10, 30}});
}

Instance rect4() {
  return rect_instance(
      "rect-4", 100.0,
      {{8, 5, 10},    {4, 8, 8},    {10, 6, 15}, {7, 8, 14},  {10, 3, 7.5},
       {12, 6, 18},   {12, 4, 12},  {12, 6, 18}, {8, 10, 20}, {7, 3, 5.25},
       {8, 6, 12},    {8, 3, 6},    {10, 6, 15}, {10, 8, 20}, {10, 7, 17.5},
       {12, 5, 15},   {12, 4, 12},  {10, 8, 20}, {12, 10, 30}, {6, 6, 9}});
}

std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, int line, const std::string& origin,
                    const std::string& what) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e) {
    throw std::runtime_error(origin + ":" + std::to_string(line) +
                             ": invalid number for " + what + ": '" + s + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

PolygonStructure rectangle_structure(double width, double height, double mass,
                                     std::optional<Point> com_offset) {
  if (!std::isfinite(width) || !std::isfinite(height) || width <= 0.0 ||
      height <= 0.0) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  const double hw = width / 2.0;
  const double hh = height / 2.0;
  const Point off = com_offset.value_or(Point(0.0, 0.0));
  if (!std::isfinite(off.x()) || !std::isfinite(off.y()) ||
      std::abs(off.x()) > hw || std::abs(off.y()) > hh) {
    throw std::invalid_argument(
        "center-of-mass offset lies outside the rectangle");
  }
  const Point corners[4] = {
      {hw, hh}, {-hw, hh}, {-hw, -hh}, {hw, -hh}};
  std::vector<PolarVertex> vs;
  vs.reserve(4);
  for (const Point& c : corners) {
    const Point rel = c - off;
    double theta = std::atan2(rel.y(), rel.x());
    if (theta < 0.0) theta += 2.0 * kPi;
    vs.push_back({rel.norm(), theta});
  }
  return PolygonStructure(mass, std::move(vs));
}

const std::vector<std::string>& builtin_ids() {
  static const std::vector<std::string> ids = {
      "opt-1", "opt-2", "opt-3", "opt-4", "opt-5",
      "opt-6", "rect-1", "rect-2", "rect-3", "rect-4"};
  return ids;
}

Instance builtin_instance(const std::string& id) {
  Instance inst;
  if (id == "opt-1") inst = opt1();
  else if (id == "opt-2") inst = opt2();
  else if (id == "opt-3") inst = opt3();
  else if (id == "opt-4") inst = opt4();
  else if (id == "opt-5") inst = opt5();
  else if (id == "opt-6") inst = opt6();
  else if (id == "rect-1") inst = rect1();
  else if (id == "rect-2") inst = rect2();
  else if (id == "rect-3") inst = rect3();
  else if (id == "rect-4") inst = rect4();
  else throw std::out_of_range("unknown builtin instance '" + id + "'");
  validate_instance(inst);
  return inst;
}

Instance random_rectangles(int k, std::pair<double, double> size_range,
                           std::pair<double, double> mass_range,
                           uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(size_range.first > 0.0) || size_range.second < size_range.first) {
    throw std::invalid_argument("invalid size range");
  }
  if (!(mass_range.first > 0.0) || mass_range.second < mass_range.first) {
    throw std::invalid_argument("invalid mass range");
  }
  SplitMix64 rng(seed);
  Instance inst;
  inst.name = "random-rectangles-" + std::to_string(k) + "-" +
              std::to_string(seed);
  double area_sum = 0.0;
  double rmax = 0.0;
  for (int i = 0; i < k; ++i) {
    const double w = rng.uniform(size_range.first, size_range.second);
    const double h = rng.uniform(size_range.first, size_range.second);
    const double m = rng.uniform(mass_range.first, mass_range.second);
    inst.polygons.push_back(rectangle_structure(w, h, m));
    area_sum += w * h;
    rmax = std::max(rmax, inst.polygons.back().radius());
  }
  inst.initial_radius =
      std::max(2.0 * std::sqrt(area_sum / kPi), rmax);
  std::ostringstream note;
  note << "generated: " << k << " uniform rectangles, sizes in ["
       << size_range.first << ", " << size_range.second << "], masses in ["
       << mass_range.first << ", " << mass_range.second << "], seed " << seed;
  inst.note = note.str();
  validate_instance(inst);
  return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
  if (!inst.note.empty()) {
    std::istringstream lines(inst.note);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  out << "name: " << inst.name << "\n";
  out << "r0: " << fmt_double(inst.initial_radius) << "\n";
  if (inst.known_optimum) {
    out << "optimum: " << fmt_double(*inst.known_optimum) << "\n";
  }
  for (const auto& p : inst.polygons) {
    out << "polygon:\n";
    out << "  mass: " << fmt_double(p.mass()) << "\n";
    for (const auto& v : p.polar_vertices()) {
      out << "  vertex: " << fmt_double(v.r) << " " << fmt_double(v.theta)
          << "\n";
    }
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_instance(inst, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

Instance parse_instance(std::istream& in, const std::string& origin) {
  auto fail = [&origin](int line, const std::string& msg) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
  };

  Instance inst;
  bool name_seen = false;
  bool r0_seen = false;
  bool in_polygon = false;
  int block_line = 0;
  std::optional<double> mass;
  std::vector<PolarVertex> vertices;

  auto finish_polygon = [&](int line) {
    if (!in_polygon) return;
    if (!mass) fail(block_line, "polygon block is missing 'mass'");
    try {
      inst.polygons.push_back(PolygonStructure(*mass, std::move(vertices)));
    } catch (const std::invalid_argument& e) {
      fail(block_line, std::string("invalid polygon: ") + e.what());
    }
    mass.reset();
    vertices.clear();
    (void)line;
  };

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      fail(lineno, "expected 'key: value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));

    if (key == "name") {
      if (in_polygon) fail(lineno, "'name' not allowed inside a polygon block");
      if (name_seen) fail(lineno, "duplicate 'name'");
      if (value.empty()) fail(lineno, "'name' must not be empty");
      inst.name = value;
      name_seen = true;
    } else if (key == "r0") {
      if (in_polygon) fail(lineno, "'r0' not allowed inside a polygon block");
      if (r0_seen) fail(lineno, "duplicate 'r0'");
      inst.initial_radius = parse_double(value, lineno, origin, "r0");
      r0_seen = true;
    } else if (key == "optimum") {
      if (in_polygon) {
        fail(lineno, "'optimum' not allowed inside a polygon block");
      }
      inst.known_optimum = parse_double(value, lineno, origin, "optimum");
    } else if (key == "polygon") {
      if (!value.empty()) fail(lineno, "'polygon:' takes no value");
      finish_polygon(lineno);
      in_polygon = true;
      block_line = lineno;
    } else if (key == "mass") {
      if (!in_polygon) fail(lineno, "'mass' outside a polygon block");
      if (mass) fail(lineno, "duplicate 'mass' in polygon block");
      mass = parse_double(value, lineno, origin, "mass");
    } else if (key == "vertex") {
      if (!in_polygon) fail(lineno, "'vertex' outside a polygon block");
      std::istringstream fields(value);
      std::string rs, ts, extra;
      fields >> rs >> ts;
      if (fields >> extra) fail(lineno, "'vertex' takes exactly two numbers");
      if (rs.empty() || ts.empty()) {
        fail(lineno, "'vertex' takes exactly two numbers");
      }
      vertices.push_back({parse_double(rs, lineno, origin, "vertex r"),
                          parse_double(ts, lineno, origin, "vertex theta")});
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  finish_polygon(lineno);
  if (!name_seen) fail(lineno, "missing 'name'");
  if (!r0_seen) fail(lineno, "missing 'r0'");
  if (inst.polygons.empty()) fail(lineno, "instance has no polygons");
  try {
    validate_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file '" + path + "'");
  return parse_instance(in, path);
}

}  // namespace wpack
