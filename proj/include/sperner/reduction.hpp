#pragma once

#include "sperner/grid.hpp"

namespace sperner {

/// Sperner instance with size parameter m + 2 derived from a Brouwer instance of
/// size m. Each point (x, y) of the input colours (2x, 2y), (2x+1, 2y), (2x, 2y+1)
/// and, for x, y > 0, (2x-1, 2y-1). The origin is 2, the rest of the left edge 1,
/// the bottom edge 2 below x = 2^(m+1) and 0 from there on; everything else is 0.
/// The result wraps the input oracle lazily and is never materialized.
SpernerInstance brouwer_to_sperner(const BrouwerInstance& inst);

/// Square of the Brouwer instance which, with coordinates doubled, contains `t`.
Square sperner_solution_to_brouwer(const Triangle& t);

}  // namespace sperner
