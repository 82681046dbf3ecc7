#pragma once

#include <string>

#include "capcup/labeling.hpp"

namespace capcup {

// Rows are beta descending, columns alpha ascending; occupied cells show
// their vertex index, holes show an empty ring.
std::string render_plane_ascii(const alpha_beta_plane& plane);
std::string render_plane_svg(const alpha_beta_plane& plane);

}  // namespace capcup
