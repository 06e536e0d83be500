#pragma once
// Legendrian-aware grid moves: stabilization and connected sum.
//
// Stabilization splits the row and column through an X marking, replacing it
// with two X markings and one O in the new 2x2 block. The four placements of
// the O have fixed Legendrian meanings; the two used here shift (tb, r) by
// (-1, -1) (negative) and (-1, +1) (positive).
//
// The connected sum overlays the factors corner to corner on the antidiagonal:
// the first factor is brought to a form with its X in the top-left cell, the
// second to a form with its O in the bottom-right cell, the two corner
// markings are deleted, and the blocks share one row and one column. The two
// deleted corners are smooth points of the fronts and the junction introduces
// exactly one positive crossing, so tb adds plus one and r adds.

#include <optional>

#include "gridknot/grid.hpp"

namespace gridknot {

enum class StabilizationKind { positive, negative };

// Placement of the new O inside the split 2x2 block (exposed for tests).
enum class StabCorner { sw, nw, se, ne };

// Stabilize at the X of `column`; the grid grows by one.
GridDiagram stabilize_at(const GridDiagram& d, int column, StabCorner corner);

// Legendrian stabilization of the front, performed at the X of column 0.
GridDiagram stabilize(const GridDiagram& d, StabilizationKind kind);

// Bring the diagram to a form with an X in the top-left cell (respectively
// an O in the bottom-right cell) by cyclic rotations that are checked to
// preserve (tb, r), with a breadth-first search over rotations and
// commutations as fallback. Returns nullopt only if the search space is
// exhausted.
std::optional<GridDiagram> normalize_x_top_left(const GridDiagram& d);
std::optional<GridDiagram> normalize_o_bottom_right(const GridDiagram& d);

// Legendrian connected sum; the result has size n1 + n2 - 1 and satisfies
// tb = tb1 + tb2 + 1, r = r1 + r2 (verified on the output).
GridDiagram connected_sum(const GridDiagram& d1, const GridDiagram& d2);

}  // namespace gridknot
