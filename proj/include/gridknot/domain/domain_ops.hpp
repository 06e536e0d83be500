#pragma once
// Measures and pairings of domains: Euler measure, point multiplicities, and
// the first-Chern pairing e(P) + 2 n_x(P), which doubles as the Maslov index
// of a periodic domain evaluated at a generator tuple.

#include "gridknot/domain/curve_diagram.hpp"

namespace gridknot::heegaard {

// Sum of mult(r) * e(r); linear in the domain.
Rational euler_measure(const CurveDiagram& d, const DomainVector& v);

// Average of the four local corner multiplicities at the point.
Rational point_multiplicity(const CurveDiagram& d, const DomainVector& v, int point);

// Additive extension over a tuple of points.
Rational point_multiplicity(const CurveDiagram& d, const DomainVector& v,
                            const std::vector<int>& tuple);

// Signed edge chain of the boundary of v.
std::vector<long long> boundary_chain(const CurveDiagram& d, const DomainVector& v);

// Is the boundary an integer combination of full curves, with zero
// multiplicity at every z basepoint? When yes, the curve coefficients are
// written to *coeffs if given.
bool is_periodic_domain(const CurveDiagram& d, const DomainVector& v,
                        std::vector<Rational>* coeffs = nullptr);

// e(P) + 2 n_x(P); requires P periodic and an integral result.
long long chern_pairing(const CurveDiagram& d, const DomainVector& P,
                        const std::vector<int>& tuple);

// Same value, exposed under its Maslov-index reading.
long long maslov_of_periodic(const CurveDiagram& d, const DomainVector& P,
                             const std::vector<int>& tuple);

// Least integer N with N > m^2 K^2 + m K.
long long winding_bound(long long m, long long k);

}  // namespace gridknot::heegaard
