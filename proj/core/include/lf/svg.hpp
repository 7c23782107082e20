#pragma once

#include <string>

#include "lf/diagram.hpp"

namespace lf {

/// Under-strands are drawn with a gap at each crossing, graph nodes as dots
/// labelled by their x-order index, edges with a direction arrow.
std::string render_svg(const Diagram& d);
std::string render_svg(const PlanarScene& scene);

/// Throws Error(IOError).
void write_svg(const Diagram& d, const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lf
