#ifndef ENPG_SVG_HPP
#define ENPG_SVG_HPP

#include <string>

#include "enpg/grid.hpp"

namespace enpg {

/// SVG drawing of a representation: light grid dots, one offset polyline per
/// path in its own hue, dots on bends, crosses on split points.
std::string render_svg(const Representation& rep);

}  // namespace enpg

#endif
