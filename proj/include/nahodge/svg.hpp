#pragma once

#include <optional>
#include <string>

#include "nahodge/polygons.hpp"

namespace nahodge {

inline constexpr const char* kRenderVersion = "nahodge-svg/1";

/// Static SVG of a polygon with axes and vertex markers; `overlay` is drawn
/// on top in a second colour (e.g. Newton over Hodge). Byte-deterministic.
std::string render_polygon_svg(const Polygon& base, const std::string& base_label,
                               const std::optional<Polygon>& overlay = std::nullopt,
                               const std::string& overlay_label = "");

}  // namespace nahodge
