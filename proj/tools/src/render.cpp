#include "qbpd_cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace qbpd::cli {

namespace {

const char* glyph(TileKind t) {
  switch (t) {
    case TileKind::Blank: return "·";
    case TileKind::ES: return "┌";
    case TileKind::WN: return "┘";
    case TileKind::SW: return "┐";
    case TileKind::NE: return "└";
    case TileKind::EW: return "─";
    case TileKind::NS: return "│";
    case TileKind::Cross: return "┼";
  }
  return "?";
}

constexpr int kCell = 40;
constexpr int kHalf = kCell / 2;

struct Point {
  int x;
  int y;
};

Point side_midpoint(Side s, int x0, int y0) {
  switch (s) {
    case Side::North: return {x0 + kHalf, y0};
    case Side::East: return {x0 + kCell, y0 + kHalf};
    case Side::South: return {x0 + kHalf, y0 + kCell};
    case Side::West: return {x0, y0 + kHalf};
  }
  return {x0, y0};
}

std::pair<Side, Side> sides_of(Segment s) {
  switch (s) {
    case Segment::ES: return {Side::East, Side::South};
    case Segment::WN: return {Side::West, Side::North};
    case Segment::SW: return {Side::South, Side::West};
    case Segment::NE: return {Side::North, Side::East};
    case Segment::EW: return {Side::East, Side::West};
    case Segment::NS: return {Side::North, Side::South};
  }
  return {Side::North, Side::South};
}

void draw_segment(std::ostringstream& svg, Segment seg, int x0, int y0) {
  const auto [a, b] = sides_of(seg);
  const Point p = side_midpoint(a, x0, y0);
  const Point q = side_midpoint(b, x0, y0);
  if (seg == Segment::EW || seg == Segment::NS) {
    svg << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y << "\"/>";
    return;
  }
  // quarter circle around the cell corner shared by both sides
  const bool east = a == Side::East || b == Side::East;
  const bool south = a == Side::South || b == Side::South;
  const Point c{east ? x0 + kCell : x0, south ? y0 + kCell : y0};
  const long cross = static_cast<long>(p.x - c.x) * (q.y - c.y) - static_cast<long>(p.y - c.y) * (q.x - c.x);
  svg << "<path d=\"M " << p.x << ' ' << p.y << " A " << kHalf << ' ' << kHalf << " 0 0 " << (cross > 0 ? 1 : 0)
      << ' ' << q.x << ' ' << q.y << "\"/>";
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  const auto& tops = d.dominoes();
  auto is_top = [&](int i, int j) { return std::binary_search(tops.begin(), tops.end(), Cell{i, j}); };
  std::string out;
  for (int i = 1; i <= d.size(); ++i) {
    for (int j = 1; j <= d.size(); ++j) {
      if (d.in_domino(i, j)) {
        out += is_top(i, j) ? "D" : "d";
      } else {
        out += glyph(d.at(i, j));
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const Diagram& d) {
  const int n = d.size();
  const int side = n * kCell;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\" viewBox=\"0 0 "
      << side << ' ' << side << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
  svg << "<g stroke=\"#cccccc\" stroke-width=\"1\">";
  for (int k = 0; k <= n; ++k) {
    svg << "<line x1=\"0\" y1=\"" << k * kCell << "\" x2=\"" << side << "\" y2=\"" << k * kCell << "\"/>";
    svg << "<line x1=\"" << k * kCell << "\" y1=\"0\" x2=\"" << k * kCell << "\" y2=\"" << side << "\"/>";
  }
  svg << "</g>\n";
  svg << "<g fill=\"#f2d7a6\" stroke=\"#8a6d3b\" stroke-width=\"1.5\">";
  for (const Cell& c : d.dominoes()) {
    svg << "<rect x=\"" << (c.col - 1) * kCell + 4 << "\" y=\"" << (c.row - 1) * kCell + 4 << "\" width=\""
        << kCell - 8 << "\" height=\"" << 2 * kCell - 8 << "\" rx=\"6\"/>";
  }
  svg << "</g>\n";
  svg << "<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" stroke-linecap=\"round\">";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (Segment s : segments_of(d.at(i, j))) draw_segment(svg, s, (j - 1) * kCell, (i - 1) * kCell);
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace qbpd::cli
