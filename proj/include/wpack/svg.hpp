#pragma once

#include <iosfwd>
#include <string>

#include "wpack/model.hpp"

namespace wpack {

/// Deterministic SVG depiction of a layout: the container circle (radius
/// layout_radius, centered on the center of mass), one closed path per
/// polygon and a center-of-mass marker. Byte output is fixed for fixed
/// inputs.
void render_svg(const Instance& inst, const Layout& layout, std::ostream& out);
void render_svg(const Instance& inst, const Layout& layout,
                const std::string& path);

}  // namespace wpack
