#include "normdyn/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>

#include "normdyn/cli/errors.hpp"

namespace normdyn::cli {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 520;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string rgb(double r, double g, double b) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r)),
                static_cast<int>(std::lround(g)), static_cast<int>(std::lround(b)));
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string sequential_color(double value, double lo, double hi) {
  const double t = hi > lo ? std::clamp((value - lo) / (hi - lo), 0.0, 1.0) : 0.0;
  const double level = 255.0 * (1.0 - t);
  return rgb(level, level, level);
}

std::string categorical_color(double code) {
  static const std::array<const char*, 5> kColors = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                                     "#8c8c8c"};
  const auto idx = std::isfinite(code) ? static_cast<long>(code) : -1;
  return idx >= 0 && idx < 4 ? kColors[idx] : kColors[4];
}

std::string open_svg(const std::string& title) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<title>" + escape(title) + "</title>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(title) + "</text>\n";
  return out;
}

std::string frame(const std::string& x_label, const std::string& y_label, double x0, double x1,
                  double y0, double y1) {
  std::string out;
  out += "<path class=\"frame\" d=\"M" + num(kLeft) + " " + num(kTop) + " H" + num(kLeft + kPlotW) +
         " V" + num(kTop + kPlotH) + " H" + num(kLeft) + " Z\" fill=\"none\" stroke=\"#333\"/>\n";
  const double base = kTop + kPlotH;
  out += "<text x=\"" + num(kLeft) + "\" y=\"" + num(base + 18) + "\" font-size=\"11\">" +
         escape(num(x0)) + "</text>\n";
  out += "<text x=\"" + num(kLeft + kPlotW) + "\" y=\"" + num(base + 18) +
         "\" text-anchor=\"end\" font-size=\"11\">" + escape(num(x1)) + "</text>\n";
  out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(base) +
         "\" text-anchor=\"end\" font-size=\"11\">" + escape(num(y0)) + "</text>\n";
  out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(kTop + 10) +
         "\" text-anchor=\"end\" font-size=\"11\">" + escape(num(y1)) + "</text>\n";
  out += "<text x=\"" + num(kLeft + kPlotW / 2) + "\" y=\"" + num(base + 40) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(x_label) + "</text>\n";
  out += "<text transform=\"translate(18 " + num(kTop + kPlotH / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" + escape(y_label) +
         "</text>\n";
  return out;
}

std::pair<double, double> finite_range(const ResultTable& table, std::size_t col) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& row : table.rows) {
    if (!std::isfinite(row[col])) continue;
    lo = std::min(lo, row[col]);
    hi = std::max(hi, row[col]);
  }
  if (lo > hi) return {0.0, 1.0};
  return {lo, hi};
}

std::string heatmap(const ResultTable& table, const SvgOptions& options) {
  const auto xi = table.column_index(options.x);
  const auto yi = table.column_index(options.y);
  const auto vi = table.column_index(options.value);

  std::set<double> xs;
  std::set<double> ys;
  double extent = 0.0;
  for (const auto& row : table.rows) {
    xs.insert(row[xi]);
    ys.insert(row[yi]);
    if (std::isfinite(row[vi])) extent = std::max(extent, std::abs(row[vi]));
  }
  const auto [vlo, vhi] = finite_range(table, vi);
  const std::vector<double> xv(xs.begin(), xs.end());
  const std::vector<double> yv(ys.begin(), ys.end());
  const double cw = kPlotW / std::max<std::size_t>(1, xv.size());
  const double ch = kPlotH / std::max<std::size_t>(1, yv.size());

  std::string out = open_svg(options.title);
  for (const auto& row : table.rows) {
    const auto ix = std::lower_bound(xv.begin(), xv.end(), row[xi]) - xv.begin();
    const auto iy = std::lower_bound(yv.begin(), yv.end(), row[yi]) - yv.begin();
    std::string fill = "#f4f4f4";
    if (std::isfinite(row[vi])) {
      switch (options.palette) {
        case Palette::diverging: fill = diverging_color(row[vi], extent); break;
        case Palette::sequential: fill = sequential_color(row[vi], vlo, vhi); break;
        case Palette::categorical: fill = categorical_color(row[vi]); break;
      }
    }
    out += "<rect class=\"cell\" x=\"" + num(kLeft + ix * cw) + "\" y=\"" +
           num(kTop + (yv.size() - 1 - iy) * ch) + "\" width=\"" + num(cw) + "\" height=\"" +
           num(ch) + "\" fill=\"" + fill + "\"/>\n";
  }
  out += frame(options.x, options.y, xv.empty() ? 0 : xv.front(), xv.empty() ? 1 : xv.back(),
               yv.empty() ? 0 : yv.front(), yv.empty() ? 1 : yv.back());
  return out + "</svg>\n";
}

std::string vector_field(const ResultTable& table, const SvgOptions& options) {
  const auto pj = table.column_index("p_j");
  const auto ps = table.column_index("p_s");
  const auto dj = table.column_index("dp_j");
  const auto ds = table.column_index("dp_s");

  std::set<double> lattice;
  double longest = 0.0;
  for (const auto& row : table.rows) {
    lattice.insert(row[pj]);
    longest = std::max(longest, std::hypot(row[dj], row[ds]));
  }
  const double spacing = lattice.size() > 1 ? 1.0 / (lattice.size() - 1) : 1.0;
  const double scale = longest > 0.0 ? 0.45 * spacing / longest : 0.0;
  auto sx = [](double p) { return kLeft + p * kPlotW; };
  auto sy = [](double p) { return kTop + (1.0 - p) * kPlotH; };

  std::string out = open_svg(options.title);
  out += "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 Z\" fill=\"#222\"/></marker></defs>\n";
  for (const auto& row : table.rows) {
    const double x1 = sx(row[pj]);
    const double y1 = sy(row[ps]);
    const double x2 = sx(row[pj] + scale * row[dj]);
    const double y2 = sy(row[ps] + scale * row[ds]);
    const bool moving = num(x1) != num(x2) || num(y1) != num(y2);
    out += "<line class=\"arrow\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\" stroke=\"#222\"" +
           (moving ? " marker-end=\"url(#head)\"" : "") + "/>\n";
  }
  out += frame("p_j (junior I-norm share)", "p_s (senior I-norm share)", 0, 1, 0, 1);
  return out + "</svg>\n";
}

std::string interval_diagram(const ResultTable& table, const SvgOptions& options) {
  const auto band = table.column_index("band");
  const auto kind = table.column_index("kind");
  const auto lo = table.column_index("lo");
  const auto hi = table.column_index("hi");

  std::set<double> bands;
  for (const auto& row : table.rows) bands.insert(row[band]);
  const std::vector<double> bv(bands.begin(), bands.end());
  const double bh = kPlotH / std::max<std::size_t>(1, bv.size());

  std::string out = open_svg(options.title);
  for (const auto& row : table.rows) {
    const auto ib = std::lower_bound(bv.begin(), bv.end(), row[band]) - bv.begin();
    const int k = static_cast<int>(row[kind]);
    const char* fill = k == 1 ? "#3b75af" : k == 2 ? "#c0392b" : "#e6e6e6";
    out += "<rect class=\"interval\" x=\"" + num(kLeft + row[lo] * kPlotW) + "\" y=\"" +
           num(kTop + ib * bh + 0.15 * bh) + "\" width=\"" + num((row[hi] - row[lo]) * kPlotW) +
           "\" height=\"" + num(0.7 * bh) + "\" fill=\"" + fill + "\"/>\n";
  }
  out += frame("c_j (junior contribution share)", "norm", 0, 1, 0, 1);
  return out + "</svg>\n";
}

std::string line_chart(const ResultTable& table, const SvgOptions& options) {
  const auto xi = table.column_index(options.x);
  if (options.series.empty()) throw SchemaError("line chart needs at least one series column");
  std::vector<std::size_t> cols;
  for (const auto& name : options.series) cols.push_back(table.column_index(name));

  const auto [x0, x1] = finite_range(table, xi);
  double y0 = 0.0;
  double y1 = 1.0;
  for (auto c : cols) {
    const auto [lo, hi] = finite_range(table, c);
    y0 = std::min(y0, lo);
    y1 = std::max(y1, hi);
  }
  auto sx = [&](double v) { return kLeft + (x1 > x0 ? (v - x0) / (x1 - x0) : 0.5) * kPlotW; };
  auto sy = [&](double v) { return kTop + (1.0 - (v - y0) / (y1 - y0)) * kPlotH; };

  static const std::array<const char*, 4> kColors = {"#4c72b0", "#c44e52", "#55a868", "#8172b2"};
  std::string out = open_svg(options.title);
  for (std::size_t s = 0; s < cols.size(); ++s) {
    std::string points;
    for (const auto& row : table.rows) {
      if (!std::isfinite(row[xi]) || !std::isfinite(row[cols[s]])) continue;
      if (!points.empty()) points += ' ';
      points += num(sx(row[xi])) + "," + num(sy(row[cols[s]]));
    }
    out += "<polyline class=\"series\" points=\"" + points + "\" fill=\"none\" stroke=\"" +
           kColors[s % kColors.size()] + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(kLeft + kPlotW - 4) + "\" y=\"" + num(kTop + 16 + 14.0 * s) +
           "\" text-anchor=\"end\" font-size=\"11\" fill=\"" + kColors[s % kColors.size()] +
           "\">" + escape(options.series[s]) + "</text>\n";
  }
  out += frame(options.x, options.y, x0, x1, y0, y1);
  return out + "</svg>\n";
}

}  // namespace

std::string diverging_color(double value, double extent) {
  if (!(extent > 0.0) || value == 0.0) return "#ffffff";
  const double t = std::clamp(value / extent, -1.0, 1.0);
  if (t < 0.0) {
    const double u = -t;  // towards red
    return rgb(255 + u * (203 - 255), 255 + u * (24 - 255), 255 + u * (29 - 255));
  }
  return rgb(255 + t * (99 - 255), 255 + t * (99 - 255), 255 + t * (99 - 255));
}

std::string render_svg(SvgKind kind, const ResultTable& table, const SvgOptions& options) {
  switch (kind) {
    case SvgKind::heatmap: return heatmap(table, options);
    case SvgKind::vector_field: return vector_field(table, options);
    case SvgKind::interval_diagram: return interval_diagram(table, options);
    case SvgKind::line: break;
  }
  return line_chart(table, options);
}

void emit_svg(SvgKind kind, const ResultTable& table, const std::filesystem::path& path,
              const SvgOptions& options) {
  write_text(path, render_svg(kind, table, options));
}

}  // namespace normdyn::cli
