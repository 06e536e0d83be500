#pragma once
// The concordance invariant tau from the Alexander filtration.
//
// The O-blocked complex, graded by Maslov and filtered by Alexander, has
// top-degree homology of rank one (the grid presents the three-sphere once
// the X markings are forgotten; the X markings filter the complex). tau is
// read off as the smallest filtration level whose inclusion hits that class:
// pick any cycle generating the top class, reduce it against the image of
// the differential with coordinates ordered by descending Alexander grading,
// and report the level of the highest surviving coordinate. The sign is
// normalized so that the right-handed trefoil has tau = +1.

#include "gridknot/complex.hpp"

namespace gridknot {

inline constexpr int kDefaultTauCap = 9;

struct TauResult {
    int tau = 0;
    // certificate: the achieved filtration level (doubled Alexander grading
    // of the minimized representative) and the dimensions that witnessed the
    // rank-one top homology
    int level_alex2 = 0;
    std::size_t top_dim = 0;
    std::size_t cycle_dim = 0;
    std::size_t boundary_rank = 0;
};

TauResult tau(const GridDiagram& d, int cap = kDefaultTauCap);

}  // namespace gridknot
