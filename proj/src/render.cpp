#include "threepage/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace threepage {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

constexpr const char* kPageColor[kPages] = {"#1f77b4", "#2ca02c", "#d62728"};

struct Geometry {
  double scale;
  double margin;
  double axis_y;

  double x(double point) const { return margin + (point - 1) * scale; }
};

// Point on the upper semicircle of arc at the given angle (0 at hi, pi at lo).
std::pair<double, double> on_arc(const Geometry& g, const Arc& a, double angle) {
  const double cx = (g.x(a.lo) + g.x(a.hi)) / 2;
  const double r = (g.x(a.hi) - g.x(a.lo)) / 2;
  return {cx + r * std::cos(angle), g.axis_y - r * std::sin(angle)};
}

// Angle on `under` where the upper semicircle of `over` crosses it.
double crossing_angle(const Geometry& g, const Arc& under, const Arc& over) {
  const double c1 = (g.x(under.lo) + g.x(under.hi)) / 2;
  const double r1 = (g.x(under.hi) - g.x(under.lo)) / 2;
  const double c2 = (g.x(over.lo) + g.x(over.hi)) / 2;
  const double r2 = (g.x(over.hi) - g.x(over.lo)) / 2;
  const double x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
  return std::acos(std::clamp((x - c1) / r1, -1.0, 1.0));
}

std::string svg_arc_path(const Geometry& g, const Arc& a, double from, double to, bool below) {
  const double r = (g.x(a.hi) - g.x(a.lo)) / 2;
  auto [x0, y0] = on_arc(g, a, from);
  auto [x1, y1] = on_arc(g, a, to);
  if (below) {
    y0 = 2 * g.axis_y - y0;
    y1 = 2 * g.axis_y - y1;
  }
  // Upper arcs run from the lo side (angle pi) toward hi, clockwise on screen.
  return "M " + num(x0) + " " + num(y0) + " A " + num(r) + " " + num(r) + " 0 0 " + (below ? "0" : "1") + " " +
         num(x1) + " " + num(y1);
}

std::string render_svg(const ThreePagePresentation& p, const RenderSpec& spec) {
  double tallest = 0;
  for (const auto& page : p.pages())
    for (const Arc& a : page) tallest = std::max(tallest, (a.hi - a.lo) * spec.scale / 2);
  const Geometry g{spec.scale, spec.scale, tallest + spec.scale};
  const double width = 2 * g.margin + (p.n() - 1) * spec.scale;
  const double height = 2 * g.axis_y;
  const double gap = spec.scale * 0.18;

  int gaps = 0;
  std::string body;
  for (int k = 0; k < kPages; ++k) {
    for (const Arc& a : p.page(k)) {
      const bool below = k == 1;
      std::vector<double> cuts;
      if (k == 0)
        for (const Arc& o : p.page(2))
          if (interleaves(a, o)) cuts.push_back(crossing_angle(g, a, o));
      std::sort(cuts.rbegin(), cuts.rend());
      gaps += static_cast<int>(cuts.size());
      const double r = (a.hi - a.lo) * spec.scale / 2;
      const double half = gap / r;
      double from = std::numbers::pi;
      for (double cut : cuts) {
        body += "  <path class=\"page" + std::to_string(k + 1) + "\" d=\"" +
                svg_arc_path(g, a, from, cut + half, below) + "\"/>\n";
        from = cut - half;
      }
      body += "  <path class=\"page" + std::to_string(k + 1) + "\" d=\"" + svg_arc_path(g, a, from, 0, below) +
              "\"/>\n";
    }
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<!-- n=" + std::to_string(p.n()) + " arcs=" + std::to_string(p.arc_count()) +
         " gaps=" + std::to_string(gaps) + " -->\n";
  out += "<style>path{fill:none;stroke-width:2}";
  for (int k = 0; k < kPages; ++k)
    out += " .page" + std::to_string(k + 1) + "{stroke:" + kPageColor[k] + "}";
  out += " text{font-family:monospace;font-size:" + num(spec.scale * 0.3) + "px}</style>\n";
  out += "  <line x1=\"" + num(g.margin / 2) + "\" y1=\"" + num(g.axis_y) + "\" x2=\"" + num(width - g.margin / 2) +
         "\" y2=\"" + num(g.axis_y) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  out += body;
  for (int i = 1; i <= p.n(); ++i) {
    out += "  <circle cx=\"" + num(g.x(i)) + "\" cy=\"" + num(g.axis_y) + "\" r=\"3\" fill=\"black\"/>\n";
    if (spec.point_labels)
      out += "  <text x=\"" + num(g.x(i) + 4) + "\" y=\"" + num(g.axis_y + spec.scale * 0.35) + "\">" +
             std::to_string(i) + "</text>\n";
  }
  if (spec.page_labels)
    for (int k = 0; k < kPages; ++k)
      out += "  <text x=\"4\" y=\"" + num(spec.scale * 0.4 * (k + 1)) + "\" fill=\"" + kPageColor[k] + "\">P" +
             std::to_string(k + 1) + "</text>\n";
  out += "</svg>\n";
  return out;
}

// Each page gets its own band of rows; an arc is drawn as a bracket whose
// height is its nesting depth within the page.
std::string render_ascii(const ThreePagePresentation& p, const RenderSpec& spec) {
  const int step = 4;
  const int width = (p.n() - 1) * step + 1;
  auto col = [&](int point) { return (point - 1) * step; };

  auto band = [&](int k, bool below) {
    const Page& page = p.page(k);
    std::vector<int> depth(page.size(), 1);
    // A nested arc sits above everything inside it.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < page.size(); ++i)
        for (std::size_t j = 0; j < page.size(); ++j)
          if (page[i].contains(page[j].lo) && depth[i] <= depth[j]) {
            depth[i] = depth[j] + 1;
            changed = true;
          }
    }
    const int rows = page.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(width), ' '));
    for (std::size_t i = 0; i < page.size(); ++i) {
      const int top = below ? depth[i] - 1 : rows - depth[i];
      for (int r = 0; r < rows; ++r) {
        const bool inside = below ? r < depth[i] : r >= top;
        if (!inside) continue;
        const char v = r == top ? '+' : '|';
        grid[r][col(page[i].lo)] = v;
        grid[r][col(page[i].hi)] = v;
      }
      for (int c = col(page[i].lo) + 1; c < col(page[i].hi); ++c) grid[top][c] = '-';
    }
    std::vector<std::string> out;
    for (auto& row : grid) {
      const auto end = row.find_last_not_of(' ');
      out.push_back("P" + std::to_string(k + 1) + "  " + (end == std::string::npos ? "" : row.substr(0, end + 1)));
    }
    return out;
  };

  std::string out;
  int crossings = 0;
  for (const Arc& a : p.page(0))
    for (const Arc& o : p.page(2)) crossings += interleaves(a, o);
  out += "n=" + std::to_string(p.n()) + " arcs=" + std::to_string(p.arc_count()) +
         " crossings=" + std::to_string(crossings) + " (P3 over P1)\n";
  for (const auto& row : band(2, false)) out += row + "\n";
  for (const auto& row : band(0, false)) out += row + "\n";
  std::string axis(static_cast<std::size_t>(width), '-');
  for (int i = 1; i <= p.n(); ++i) axis[col(i)] = 'o';
  out += "    " + axis + "\n";
  if (spec.point_labels) {
    std::string labels(static_cast<std::size_t>(width + 2), ' ');
    for (int i = 1; i <= p.n(); ++i) {
      const std::string s = std::to_string(i);
      labels.replace(static_cast<std::size_t>(col(i)), s.size(), s);
    }
    const auto end = labels.find_last_not_of(' ');
    out += "    " + labels.substr(0, end + 1) + "\n";
  }
  for (const auto& row : band(1, true)) out += row + "\n";
  return out;
}

}  // namespace

std::string render(const ThreePagePresentation& p, const RenderSpec& spec) {
  if (!(spec.scale > 0)) throw std::invalid_argument("render scale must be positive");
  require_valid(p);
  return spec.format == RenderFormat::Svg ? render_svg(p, spec) : render_ascii(p, spec);
}

}  // namespace threepage
