#pragma once
// Weak admissibility: no nontrivial combination of periodic domains has only
// nonnegative (equivalently only nonpositive) multiplicities. Decided by
// exact Fourier-Motzkin elimination over the span of the given basis; an
// inadmissible diagram comes with an explicit integral witness.

#include "gridknot/domain/curve_diagram.hpp"

namespace gridknot::heegaard {

struct AdmissibilityResult {
    bool admissible = true;
    std::vector<long long> witness_coefficients;  // in terms of the basis
    DomainVector witness;                         // the offending domain
};

AdmissibilityResult is_weakly_admissible(const CurveDiagram& d,
                                         const std::vector<DomainVector>& basis);

}  // namespace gridknot::heegaard
