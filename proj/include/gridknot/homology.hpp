#pragma once
// Bigraded homology of the fully blocked grid complex over F2.
//
// Ranks are computed per (M, 2A) block by Gaussian elimination with bitset
// rows; blocks are eliminated in parallel and merged deterministically. The
// table equals hat-HFK of the diagram's knot tensored with (n-1) copies of a
// two-dimensional factor supported in bigradings (0,0) and (-1,-1), so total
// rank is hat-rank times 2^(n-1) and thinness is unaffected.

#include <cstddef>
#include <map>
#include <string>

#include "gridknot/complex.hpp"

namespace gridknot {

// Full homology (all blocks) stays tractable through n = 9.
inline constexpr int kDefaultHomologyCap = 9;

struct HomologyTable {
    int n = 0;
    std::map<std::pair<int, int>, std::size_t> ranks;  // (M, 2A) -> rank

    std::size_t total_rank() const;
    std::size_t rank(int maslov, int alex2) const;
};

HomologyTable homology(const GridDiagram& d, int cap = kDefaultHomologyCap);

// True iff every nonzero rank sits on one diagonal M - A = const.
bool is_thin(const HomologyTable& t);

// Divide out the 2^(n-1) smearing factor: the returned table T' satisfies
// blocked = T' tensored with ((0,0) + (-1,-1))^(n-1). The blocked table obeys
// rank(M, 2A) = rank(M - 2A - (n-1), -2A - 2(n-1)); the collapsed one obeys
// the unshifted rank(M, 2A) = rank(M - 2A, -2A).
HomologyTable collapse_smearing(const HomologyTable& t);

// TSV rows "M<TAB>2A<TAB>rank" sorted by (M, 2A); JSON mirror.
std::string to_tsv(const HomologyTable& t);
std::string to_json(const HomologyTable& t);

}  // namespace gridknot
