#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpack/model.hpp"

namespace wpack {

/// Axis-aligned w x h rectangle as a 4-vertex structure. com_offset (from
/// the rectangle center) may lie anywhere inside or on the rectangle, so a
/// center of mass on an edge or corner is representable; offsets outside
/// are rejected. With no offset all four r values equal sqrt(w^2+h^2)/2 and
/// the thetas follow the (atan(h/w), pi-, pi+, 2pi-) pattern.
PolygonStructure rectangle_structure(double width, double height, double mass,
                                     std::optional<Point> com_offset = {});

/// Built-in benchmark instances: "opt-1".."opt-6" (known optima) and
/// "rect-1".."rect-4" (rectangular instances from the literature).
/// Unknown ids throw std::out_of_range.
Instance builtin_instance(const std::string& id);

const std::vector<std::string>& builtin_ids();

/// k random rectangles with uniform sizes and masses. R0 is twice the
/// area-based lower-bound radius sqrt(sum area / pi), raised to the largest
/// polygon radius when a thin rectangle would exceed it.
Instance random_rectangles(int k, std::pair<double, double> size_range,
                           std::pair<double, double> mass_range,
                           uint64_t seed);

/// Line-oriented UTF-8 text format; see the project README for the grammar.
/// load validates fully and reports parse errors with line numbers.
Instance load_instance(const std::string& path);
Instance parse_instance(std::istream& in, const std::string& origin);
void save_instance(const Instance& inst, const std::string& path);
void write_instance(const Instance& inst, std::ostream& out);

}  // namespace wpack
