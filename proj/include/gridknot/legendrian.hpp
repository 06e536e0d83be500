#pragma once
// Classical invariants of the Legendrian front carried by a grid diagram.
//
// Front convention (fixed once, validated against the pinned fixtures): the
// knot is drawn with vertical segments X -> O crossing over horizontal
// segments O -> X; rotating the picture 45 degrees turns each NE and SW
// corner into a cusp while NW and SE corners smooth out. Then
//   tb = writhe - (#cusps)/2,
//   r  = (#down-cusps - #up-cusps)/2,
// where the down-cusps are the NE corners at O markings together with the SW
// corners at X markings (the traversal moves downward through those), and
// the up-cusps are the other two kinds.

#include "gridknot/grid.hpp"

namespace gridknot {

struct CornerCounts {
    int ne_o = 0, sw_o = 0, ne_x = 0, sw_x = 0;
    int cusps() const { return ne_o + sw_o + ne_x + sw_x; }
    int down() const { return ne_o + sw_x; }
    int up() const { return ne_x + sw_o; }
};

struct ClassicalInvariants {
    int tb = 0;
    int r = 0;
    int sl = 0;  // always tb - r
    int writhe = 0;
};

CornerCounts corner_counts(const GridDiagram& d);
int writhe(const GridDiagram& d);
ClassicalInvariants classical_invariants(const GridDiagram& d);

}  // namespace gridknot
