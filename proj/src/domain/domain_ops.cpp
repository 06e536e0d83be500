#include "gridknot/domain/domain_ops.hpp"

#include <stdexcept>

namespace gridknot::heegaard {

static void check_sized(const CurveDiagram& d, const DomainVector& v) {
    if (v.mult.size() != d.regions.size())
        throw std::invalid_argument("domain vector does not cover all regions");
}

Rational euler_measure(const CurveDiagram& d, const DomainVector& v) {
    check_sized(d, v);
    Rational e;
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        e += d.regions[r].euler * Rational(v.mult[r]);
    return e;
}

Rational point_multiplicity(const CurveDiagram& d, const DomainVector& v, int point) {
    check_sized(d, v);
    if (point < 0 || point >= static_cast<int>(d.points.size()))
        throw std::invalid_argument("unknown point index");
    long long corner_sum = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        corner_sum += static_cast<long long>(d.corners[r][point]) * v.mult[r];
    return Rational(corner_sum, 4);
}

Rational point_multiplicity(const CurveDiagram& d, const DomainVector& v,
                            const std::vector<int>& tuple) {
    Rational total;
    for (int p : tuple) total += point_multiplicity(d, v, p);
    return total;
}

std::vector<long long> boundary_chain(const CurveDiagram& d, const DomainVector& v) {
    check_sized(d, v);
    std::vector<long long> chain(d.edges.size(), 0);
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (auto [e, s] : d.regions[r].boundary) chain[e] += s * v.mult[r];
    return chain;
}

bool is_periodic_domain(const CurveDiagram& d, const DomainVector& v,
                        std::vector<Rational>* coeffs) {
    check_sized(d, v);
    // every z basepoint has multiplicity zero
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (const auto& bp : d.regions[r].basepoints)
            if (bp == "z" && v.mult[r] != 0) return false;
    // edges are partitioned among the curves, so the boundary lies in the
    // span of full curves iff it is constant along each curve
    std::vector<long long> chain = boundary_chain(d, v);
    if (coeffs) coeffs->assign(d.curves.size(), Rational(0));
    for (std::size_t c = 0; c < d.curves.size(); ++c) {
        const Curve& curve = d.curves[c];
        if (curve.edges.empty()) continue;
        long long a = chain[curve.edges.front()];
        for (int e : curve.edges)
            if (chain[e] != a) return false;
        if (coeffs) (*coeffs)[c] = Rational(a);
    }
    return true;
}

long long chern_pairing(const CurveDiagram& d, const DomainVector& P,
                        const std::vector<int>& tuple) {
    if (!is_periodic_domain(d, P))
        throw std::invalid_argument("chern_pairing: domain is not periodic");
    Rational value = euler_measure(d, P) + Rational(2) * point_multiplicity(d, P, tuple);
    if (!value.is_integer())
        throw std::invalid_argument("chern_pairing: non-integral pairing " + value.str());
    return value.num();
}

long long maslov_of_periodic(const CurveDiagram& d, const DomainVector& P,
                             const std::vector<int>& tuple) {
    return chern_pairing(d, P, tuple);
}

long long winding_bound(long long m, long long k) {
    if (m < 0 || k < 0) throw std::invalid_argument("winding_bound: negative argument");
    __int128 bound = static_cast<__int128>(m) * m * k * k + static_cast<__int128>(m) * k;
    __int128 n = bound + 1;
    if (n > INT64_MAX) throw RationalOverflow();
    return static_cast<long long>(n);
}

}  // namespace gridknot::heegaard
