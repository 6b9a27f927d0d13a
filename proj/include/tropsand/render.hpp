#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropsand/edge_weights.hpp"
#include "tropsand/sand_state.hpp"
#include "tropsand/tropical_curve.hpp"

namespace tropsand {

/// mono follows the printed legend; color tints the marks by deficit.
enum class Palette { Mono, Color };

/// Throws std::invalid_argument for anything but "mono" or "color".
Palette parse_palette(const std::string& name);

/// Marks per height class. Index: 0 -> height <= 0 (cross), 1 -> circle, 2 -> square, 3 -> background,
/// 4 -> height >= 4 (disc).
using MarkCounts = std::array<std::size_t, 5>;

MarkCounts height_histogram(const SandState& state);

struct RenderOptions {
    /// Pixels per site; 0 picks one from the grid size.
    int cell = 0;
    /// Empty cells around the bounding box of N * Omega.
    int margin = 2;
    Palette palette = Palette::Mono;
    /// Curve in unscaled coordinates, drawn over the grid.
    std::optional<TropicalCurve> overlay;
    /// Labels come from the rounded estimates when present, else from the curve weights. Only labels >= 2
    /// are drawn, as weight-1 edges are left unlabelled.
    std::optional<WeightTable> weights;
};

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  ///< row-major RGB
};

struct RenderSummary {
    int width_cells = 0;   ///< bounding box of N * Omega plus twice the margin
    int height_cells = 0;
    int cell = 0;
    MarkCounts marks{};
    std::vector<std::string> labels;
};

RgbImage render_raster(const SandState& state, const RenderOptions& options, RenderSummary* summary = nullptr);
void write_ppm(std::ostream& out, const RgbImage& image);

std::string render_svg(const SandState& state, const RenderOptions& options, RenderSummary* summary = nullptr);

}  // namespace tropsand
