#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kcob/quadrant.hpp"

namespace kcob {

/// Lattice window [0, width) x [0, height) in (c0, c2).
struct GridExtent {
    std::int64_t width = 0;
    std::int64_t height = 0;
};

/// Largest corner coordinate plus three in each direction (3x3 when empty).
GridExtent default_extent(const QuadrantUnion& s);
GridExtent default_extent(const GenusFamily& f);

/// Text grid with the origin at the lower left. '*' marks a corner, 'o' any
/// other member, '.' a non-member. Throws std::invalid_argument for a window
/// that is empty or wider/taller than 500.
std::string render_ascii(const QuadrantUnion& s, std::optional<GridExtent> extent = std::nullopt);
/// One grid per genus on a shared window, captioned g=0, g=1, ..., and g>=k
/// on the last (stable) panel.
std::string render_ascii(const GenusFamily& f, std::optional<GridExtent> extent = std::nullopt);

/// Standalone SVG 1.1 document using rect, line, circle and text only.
std::string render_svg(const QuadrantUnion& s, std::optional<GridExtent> extent = std::nullopt);
/// Panels left to right with the same captions as the ASCII form.
std::string render_svg(const GenusFamily& f, std::optional<GridExtent> extent = std::nullopt);

}  // namespace kcob
