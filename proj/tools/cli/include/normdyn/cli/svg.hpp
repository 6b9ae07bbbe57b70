#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "normdyn/cli/result_table.hpp"

namespace normdyn::cli {

enum class SvgKind { heatmap, vector_field, interval_diagram, line };

enum class Palette {
  diverging,    ///< red below zero, white at zero, grey above
  sequential,   ///< white (low) to black (high)
  categorical,  ///< integer codes to fixed colours
};

/// Column bindings for the renderers.
///
///   heatmap:          x, y, value (one rectangle per row)
///   vector_field:     p_j, p_s, dp_j, dp_s (one arrow per row)
///   interval_diagram: band, kind, lo, hi (kind 0 = success, 1 = junior
///                     refuses, 2 = senior refuses; one band per distinct
///                     `band` value)
///   line:             x plus every column listed in `series`
struct SvgOptions {
  std::string title;
  std::string x = "x";
  std::string y = "y";
  std::string value = "value";
  std::vector<std::string> series;
  Palette palette = Palette::diverging;
};

/// Throws SchemaError when a bound column is missing.
std::string render_svg(SvgKind kind, const ResultTable& table, const SvgOptions& options);

void emit_svg(SvgKind kind, const ResultTable& table, const std::filesystem::path& path,
              const SvgOptions& options);

/// Colour for `value` on a diverging scale with half-range `extent`.
std::string diverging_color(double value, double extent);

}  // namespace normdyn::cli
