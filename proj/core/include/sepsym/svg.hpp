#pragma once

#include <string>

#include "sepsym/combi.hpp"

namespace sepsym {

struct SvgOptions {
  double scale = 40.0;    // pixels per unit
  double margin = 30.0;   // pixels
  bool label_vertices = true;
  int precision = 3;      // digits after the decimal point
};

// Deterministic SVG: one <polygon> per tile tagged with its kind, vertex
// markers with set labels, and the middle line when the combi is symmetric.
std::string export_svg(const FtqCombi& k, const SvgOptions& opts = {});
std::string export_svg(const FineQuasiCombi& q, const SvgOptions& opts = {});

}  // namespace sepsym
