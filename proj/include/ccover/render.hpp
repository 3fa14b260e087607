#pragma once

#include "ccover/instance.hpp"

#include <optional>
#include <string>

namespace ccover {

// SVG picture of an instance: circles for blue points, five-pointed stars
// for red points, outlined rectangles for an optional cover (degenerate
// rectangles are drawn with a hairline of padding so they stay visible).
std::string render_svg(const Instance& inst, const std::optional<Cover>& cover = std::nullopt);

}  // namespace ccover
