#include "gridknot/legendrian.hpp"

namespace gridknot {

CornerCounts corner_counts(const GridDiagram& d) {
    CornerCounts cc;
    std::vector<int> oinv = inverse_perm(d.o), xinv = inverse_perm(d.x);
    for (int c = 0; c < d.n; ++c) {
        // O corner: vertical ray points at the X of the column, horizontal
        // ray at the X of the row.
        bool o_up = d.x[c] > d.o[c];
        bool o_east = xinv[d.o[c]] > c;
        if (o_up && o_east) ++cc.ne_o;
        if (!o_up && !o_east) ++cc.sw_o;
        // X corner: rays point at the O of the column / row.
        bool x_up = d.o[c] > d.x[c];
        bool x_east = oinv[d.x[c]] > c;
        if (x_up && x_east) ++cc.ne_x;
        if (!x_up && !x_east) ++cc.sw_x;
    }
    return cc;
}

int writhe(const GridDiagram& d) {
    std::vector<int> oinv = inverse_perm(d.o), xinv = inverse_perm(d.x);
    int w = 0;
    for (int c = 0; c < d.n; ++c) {
        int lo = std::min(d.o[c], d.x[c]);
        int hi = std::max(d.o[c], d.x[c]);
        int vdir = d.o[c] > d.x[c] ? +1 : -1;  // X -> O
        for (int r = lo + 1; r < hi; ++r) {
            int cl = std::min(oinv[r], xinv[r]);
            int ch = std::max(oinv[r], xinv[r]);
            if (c <= cl || c >= ch) continue;  // horizontal strand not under this column
            int hdir = xinv[r] > oinv[r] ? +1 : -1;  // O -> X
            w += hdir * vdir;  // cross(under, over) with over vertical
        }
    }
    return w;
}

ClassicalInvariants classical_invariants(const GridDiagram& d) {
    require_valid(d);
    CornerCounts cc = corner_counts(d);
    ClassicalInvariants inv;
    inv.writhe = writhe(d);
    inv.tb = inv.writhe - cc.cusps() / 2;
    inv.r = (cc.down() - cc.up()) / 2;
    inv.sl = inv.tb - inv.r;
    return inv;
}

}  // namespace gridknot
