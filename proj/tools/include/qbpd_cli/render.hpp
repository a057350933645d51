#pragma once

#include <string>

#include "qbpd/diagram.hpp"

namespace qbpd::cli {

/// One line per row; box-drawing glyphs, '·' for blanks, 'D'/'d' for the
/// upper/lower cell of a domino.
std::string render_ascii(const Diagram& d);

/// Self-contained SVG, 40px per cell.
std::string render_svg(const Diagram& d);

}  // namespace qbpd::cli
