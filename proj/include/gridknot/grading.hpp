#pragma once
// Maslov and Alexander bigradings of grid states.
//
// Planar lattice-count conventions: states sit on lattice points (i, s[i]),
// markings at cell centers (i + 1/2, o[i] + 1/2). With I(A, B) counting
// pairs (a, b), a strictly southwest of b, and J the symmetrized half-sum,
//   M_O(x) = J(x,x) - 2 J(x,O) + J(O,O) + 1,
//   A(x)   = (M_O(x) - M_X(x))/2 - (n-1)/2.
// The Alexander grading is stored doubled to stay integral; for knot grids
// it is in fact always an even integer under these conventions.

#include "gridknot/grid.hpp"
#include "gridknot/state.hpp"

namespace gridknot {

struct Bigrading {
    int maslov = 0;
    int alex2 = 0;  // twice the Alexander grading
    bool operator==(const Bigrading&) const = default;
    bool operator<(const Bigrading& o) const {
        return maslov != o.maslov ? maslov < o.maslov : alex2 < o.alex2;
    }
};

// Maslov grading computed against an arbitrary marking permutation.
int maslov_against(const std::vector<int>& mark, const GridState& s);

Bigrading bigrading(const GridDiagram& d, const GridState& s);

}  // namespace gridknot
