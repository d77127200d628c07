#pragma once

#include <hypack/body.hpp>
#include <hypack/packing.hpp>

#include <string>

namespace hypack {

// Outline drawing of the body: the body boundary in a heavy stroke, the
// auxiliary pieces in a light stroke. Deterministic bytes for fixed input.
std::string render_body_svg(const Body& b);

// Outline drawing of a packing window: every copy's boundary stroked.
std::string render_window_svg(const PackingWindow& w);

}  // namespace hypack
