#pragma once

#include "arccover/drawing.hpp"

#include <string>

namespace arccover {

struct SvgOptions {
    double width = 480;          // canvas width in px; height follows the bbox
    double margin = 24;          // px
    bool show_supports = false;  // dashed guide circles / lines
    bool merge_arcs = true;      // join contiguous same-circle arcs into one path
    bool show_vertices = true;
    std::string stroke = "#1a1a1a";
    std::string guide_stroke = "#b0b0b0";
};

/// Deterministic SVG 1.1 rendering of a 2D drawing: one path per arc (or
/// per merged maximal arc), one marker per vertex, optional dashed
/// support guides.  Throws validation_error for 3D drawings.
std::string svg_export(const Drawing& d, const SvgOptions& opts = {});

} // namespace arccover
