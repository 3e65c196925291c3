#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhombus/pattern.hpp"

namespace rhombus {

// What to draw and how. Sources: the first m grid rows, a standard
// stealth configuration, or a haystack diamond. 1 = black = odd.
struct RenderSpec {
    enum class Source { rows, stealth, haystack };
    enum class Format { pbm, pbm_packed, svg };

    Source source = Source::rows;
    std::int64_t param = 1;  // m for rows, order for stealth/haystack

    Format format = Format::pbm;
    bool overlay_octagon = false;
    bool overlay_decomposition = false;
    bool overlay_exceptional = false;

    int cell_size = 4;       // svg units per cell
    int stroke_width = 1;    // svg overlay stroke
    std::int64_t max_width = 1 << 16;  // raster width cap, cells
};

// Cell data for a spec's source: rows(m) uses the window rows 1..m,
// columns -(m-1)..m-1; region sources use their tight bounding window.
BitPattern render_source(const RenderSpec& spec);

// Plain PBM ("P1", width, height, one raster row per line, cells
// separated by spaces, top row first). pbm_packed emits binary P4.
// Throws std::length_error when the width exceeds spec.max_width.
std::string render_pbm(const RenderSpec& spec);

// SVG 1.1: white canvas, one black square per one-cell, overlays in
// separate groups so they never alter cell pixels. Overlay elements
// carry data-cell attributes with lattice coordinates.
std::string render_svg(const RenderSpec& spec);

// Parses a P1 or P4 document produced by render_pbm (round-trip exact).
// Throws std::invalid_argument on malformed input.
struct PbmImage {
    std::int64_t width = 0, height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, 1 = black

    std::uint8_t at(std::int64_t x, std::int64_t y) const {
        return pixels[static_cast<std::size_t>(y * width + x)];
    }
};
PbmImage parse_pbm(const std::string& bytes);

}  // namespace rhombus
