#pragma once
// Static pictures of presentations: SVG with semicircular arcs, or ASCII.

#include <string>

#include "threepage/presentation.hpp"

namespace threepage {

enum class RenderFormat { Svg, Ascii };

struct RenderSpec {
  RenderFormat format = RenderFormat::Svg;
  double scale = 40.0;  // distance between neighbouring points (SVG units)
  bool point_labels = true;
  bool page_labels = true;
};

/// Page 2 arcs below the axis, pages 1 and 3 above. Page-1 arcs are broken
/// where a page-3 arc passes over them. Output is byte-stable.
/// Throws InvalidPresentation for invalid input and std::invalid_argument
/// for a non-positive scale.
std::string render(const ThreePagePresentation& p, const RenderSpec& spec = {});

}  // namespace threepage
