#pragma once
// Rational nullspace of the boundary map: the space of domains whose boundary
// is a combination of full curves from the chosen families and which avoid
// the z basepoint. A deterministic normal form eliminates designated curve
// coefficients from later basis elements by adding multiples of earlier ones.

#include <set>

#include "gridknot/domain/curve_diagram.hpp"

namespace gridknot::heegaard {

// Basis of the rational periodic-domain space, returned as primitive integer
// vectors (first nonzero multiplicity positive). Throws on inconsistent
// incidence data. The basis is post-processed so that, scanning curve columns
// with the beta family first, each curve coefficient is carried by at most
// one basis element (reduced echelon over the curve coefficients).
std::vector<DomainVector> periodic_domain_basis(const CurveDiagram& d,
                                                const std::set<Family>& families);

}  // namespace gridknot::heegaard
