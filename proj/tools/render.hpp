#ifndef MALIGN_TOOLS_RENDER_HPP
#define MALIGN_TOOLS_RENDER_HPP

#include <string>

#include "malign/types.hpp"

namespace malign::render {

// Maps a distance to a 0..255 gray level: darker = nearer, min-max
// normalized. A constant matrix maps everything to mid-gray 128.
int gray_level(double value, double min, double max);

// Plain "P2" PGM, m_text rows by n_audio columns: audio runs along the
// horizontal axis, text along the vertical (row 0 = text frame 0).
// `distances` is audio-major (n x m) as produced by distance_matrix.
std::string render_pgm(const Grid& distances);

// SVG 1.1 with the same orientation; the best-alignment path cells are
// overlaid in yellow.
std::string render_svg(const Grid& distances, const Alignment& path);

// True when max == min (the degenerate all-equal case).
bool degenerate_range(const Grid& distances);

}  // namespace malign::render

#endif  // MALIGN_TOOLS_RENDER_HPP
