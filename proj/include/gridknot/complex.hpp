#pragma once
// Rectangle combinatorics and the grid chain-complex differentials.
//
// For states x, y differing by a transposition there are exactly two
// rectangles on the torus with lower-left/upper-right corners on x. With
// xll < xur and yll < yur they come in four planar types, as in the diagram
// below (0 = planar, 1 = wraps both ways, 2 = wraps rows, 3 = wraps columns):
//
//      |      |
//   1  |  2   |  1
//  ----+------+----
//   3  |  0   |  3
//  ----+------+----
//   1  |  2   |  1
//
// The fully blocked differential counts rectangles containing no O, no X and
// no component of the moving state; the O-blocked differential drops the X
// condition (X markings then drive the Alexander filtration). All counts are
// parities over F2.

#include <array>
#include <vector>

#include "gridknot/grading.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/state.hpp"

namespace gridknot {

class GridComplex {
public:
    explicit GridComplex(const GridDiagram& d);

    const GridDiagram& diagram() const { return d_; }
    int n() const { return d_.n; }

    // Successors in the fully blocked complex (empty of O, X and components).
    void boundary_blocked(const GridState& s, std::vector<GridState>& out) const;

    // Successors in the O-blocked complex (X markings allowed inside).
    void boundary_o_blocked(const GridState& s, std::vector<GridState>& out) const;

private:
    // counts of markings inside rectangle [xll,xur) x [yll,yur) of each type
    int marks_in(const std::vector<int>& mark, int xll, int yll, int xur, int yur,
                 int type) const;

    template <bool BlockX>
    void boundary(const GridState& s, std::vector<GridState>& out) const;

    GridDiagram d_;
    // o_free_[type][idx], ox_free_[type][idx] with idx = ((xll*n+yll)*n+xur)*n+yur
    std::array<std::vector<char>, 4> o_free_;
    std::array<std::vector<char>, 4> ox_free_;
    int idx(int xll, int yll, int xur, int yur) const {
        return ((xll * d_.n + yll) * d_.n + xur) * d_.n + yur;
    }
};

}  // namespace gridknot
