#pragma once

// Mutating primitives shared by the simplifier and the skein engine.

#include <span>

#include "fpb/diagram.hpp"

namespace fpb::detail {

/// Switches over and under at crossing c, keeping the planar embedding.
void switch_crossing(LinkDiagram& d, int c);

/// Replaces crossing c by its oriented smoothing.
void smooth_crossing(LinkDiagram& d, int c);

/// Reidemeister I (and II when `use_r2`) until none applies.
void reduce(LinkDiagram& d, bool use_r2);

}  // namespace fpb::detail
