#include "sepsym/svg.hpp"

#include <cstdio>
#include <sstream>

namespace sepsym {

namespace {

class Canvas {
 public:
  Canvas(const ZonogonConfig& cfg, const SvgOptions& opts) : opts_(opts) {
    // Bounding box of Z: x from the sum of negative x_i to the sum of
    // positive ones, y from 0 to the total height.
    for (const auto& g : cfg.generators) {
      if (g.x < 0) min_x_ += to_double(g.x);
      if (g.x > 0) max_x_ += to_double(g.x);
      max_y_ += to_double(g.y);
    }
  }

  std::string num(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", opts_.precision, v + 0.0);
    return buf;
  }

  std::string px(const Point2& p) const { return num(sx(p)) + "," + num(sy(p)); }
  double sx(const Point2& p) const { return opts_.margin + (to_double(p.x) - min_x_) * opts_.scale; }
  double sy(const Point2& p) const { return opts_.margin + (max_y_ - to_double(p.y)) * opts_.scale; }
  double width() const { return 2 * opts_.margin + (max_x_ - min_x_) * opts_.scale; }
  double height() const { return 2 * opts_.margin + max_y_ * opts_.scale; }
  double left() const { return opts_.margin; }
  double right() const { return width() - opts_.margin; }

 private:
  const SvgOptions& opts_;
  double min_x_ = 0;
  double max_x_ = 0;
  double max_y_ = 0;
};

std::string render(const ZonogonConfig& cfg, const std::vector<Tile>& tiles, const std::vector<ColorSet>& vertices,
                   bool symmetric, const SvgOptions& opts) {
  const Canvas c(cfg, opts);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.num(c.width()) << "\" height=\""
     << c.num(c.height()) << "\" viewBox=\"0 0 " << c.num(c.width()) << " " << c.num(c.height()) << "\">\n";
  os << "<style>\n"
     << "  .delta { fill: #f4d58d; stroke: #333; stroke-width: 1 }\n"
     << "  .nabla { fill: #8dc6f4; stroke: #333; stroke-width: 1 }\n"
     << "  .upper { fill: #b8e0a8; stroke: #333; stroke-width: 1 }\n"
     << "  .lower { fill: #e0a8c8; stroke: #333; stroke-width: 1 }\n"
     << "  .middle-line { stroke: #c00; stroke-width: 1.5; stroke-dasharray: 6 4 }\n"
     << "  .vertex { fill: #000 }\n"
     << "  .label { font: 9px sans-serif; fill: #000 }\n"
     << "</style>\n";
  os << "<g class=\"tiles\">\n";
  for (const auto& t : tiles) {
    os << "  <polygon class=\"" << to_string(t.kind) << "\" points=\"";
    const auto poly = tile_polygon(t, cfg);
    for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << c.px(poly[i]);
    os << "\"/>\n";
  }
  os << "</g>\n";
  if (symmetric && cfg.has_middle_line()) {
    const Point2 on{0, cfg.middle_height()};
    os << "<line class=\"middle-line\" x1=\"" << c.num(c.left()) << "\" y1=\"" << c.num(c.sy(on)) << "\" x2=\""
       << c.num(c.right()) << "\" y2=\"" << c.num(c.sy(on)) << "\"/>\n";
  }
  os << "<g class=\"vertices\">\n";
  for (const auto& v : vertices) {
    const Point2 p = embed(v, cfg);
    os << "  <circle class=\"vertex\" cx=\"" << c.num(c.sx(p)) << "\" cy=\"" << c.num(c.sy(p)) << "\" r=\"2.5\"/>\n";
    if (opts.label_vertices) {
      os << "  <text class=\"label\" x=\"" << c.num(c.sx(p) + 4) << "\" y=\"" << c.num(c.sy(p) - 4) << "\">"
         << v.to_string() << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string export_svg(const FtqCombi& k, const SvgOptions& opts) {
  return render(k.config, k.tiles, k.vertex_set(), k.symmetric, opts);
}

std::string export_svg(const FineQuasiCombi& q, const SvgOptions& opts) {
  return render(q.config, q.tiles, q.vertex_set(), q.symmetric, opts);
}

}  // namespace sepsym
