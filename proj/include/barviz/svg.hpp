#pragma once

#include <string>

#include "barviz/geometry.hpp"
#include "barviz/rational.hpp"

namespace barviz {

struct RenderSpec {
    Rational x_scale = 24;   // px per x unit
    Rational y_scale = 36;   // px per level unit
    Rational thickness = 8;  // bar height in px
    bool labels = true;
    bool strips = false;  // dashed witness-strip overlays from visible_pairs
};

// Deterministic SVG 1.1: one <rect> per bar, emitted in (y, x_lo, vertex)
// order; identical input yields identical bytes. Coordinates are exact
// decimal strings, never binary floating point.
std::string render_svg(const Layout& l, const RenderSpec& spec);

}  // namespace barviz
