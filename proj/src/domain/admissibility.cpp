#include "gridknot/domain/admissibility.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace gridknot::heegaard {

namespace {

// Inequality sum_j coeff[j] x_j + constant >= 0.
struct Ineq {
    std::vector<Rational> coeff;
    Rational constant;
};

// Fourier-Motzkin: eliminate variables from the back, then reconstruct a
// satisfying point on the way out. Returns nullopt if infeasible.
std::optional<std::vector<Rational>> solve(std::vector<Ineq> system, std::size_t nvars) {
    if (nvars == 0) {
        for (const auto& q : system)
            if (q.constant < Rational(0)) return std::nullopt;
        return std::vector<Rational>{};
    }
    std::size_t k = nvars - 1;
    std::vector<Ineq> lower, upper, rest;
    for (auto& q : system) {
        Rational c = q.coeff[k];
        q.coeff.resize(k);
        if (c.is_zero()) rest.push_back(std::move(q));
        else if (c > Rational(0)) {
            // x_k >= -(rest)/c
            for (auto& v : q.coeff) v = v / c;
            q.constant = q.constant / c;
            lower.push_back(std::move(q));
        } else {
            for (auto& v : q.coeff) v = v / (-c);
            q.constant = q.constant / (-c);
            upper.push_back(std::move(q));  // x_k <= rest
        }
    }
    // pair every lower bound with every upper bound
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            Ineq q;
            q.coeff.resize(k);
            for (std::size_t j = 0; j < k; ++j) q.coeff[j] = lo.coeff[j] + up.coeff[j];
            q.constant = lo.constant + up.constant;
            rest.push_back(std::move(q));
        }
    auto partial = solve(std::move(rest), k);
    if (!partial) return std::nullopt;
    std::vector<Rational>& point = *partial;

    auto eval = [&](const Ineq& q) {
        Rational s = q.constant;
        for (std::size_t j = 0; j < k; ++j) s += q.coeff[j] * point[j];
        return s;
    };
    std::optional<Rational> lo_bound, up_bound;
    for (const auto& q : lower) {
        Rational b = -eval(q);
        if (!lo_bound || b > *lo_bound) lo_bound = b;
    }
    for (const auto& q : upper) {
        Rational b = eval(q);
        if (!up_bound || b < *up_bound) up_bound = b;
    }
    Rational x;
    if (lo_bound && up_bound) x = (*lo_bound + *up_bound) / Rational(2);
    else if (lo_bound) x = *lo_bound;
    else if (up_bound) x = *up_bound;
    point.push_back(x);
    return point;
}

}  // namespace

AdmissibilityResult is_weakly_admissible(const CurveDiagram& d,
                                         const std::vector<DomainVector>& basis) {
    AdmissibilityResult res;
    if (basis.empty()) return res;  // vacuously admissible
    std::size_t nr = d.regions.size();
    std::size_t k = basis.size();
    for (const auto& b : basis)
        if (b.mult.size() != nr)
            throw std::invalid_argument("is_weakly_admissible: basis domain size mismatch");

    // feasibility of: every region multiplicity >= 0, total multiplicity >= 1
    std::vector<Ineq> system;
    Ineq total;
    total.coeff.assign(k, Rational(0));
    total.constant = Rational(-1);
    for (std::size_t r = 0; r < nr; ++r) {
        Ineq q;
        q.coeff.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            q.coeff[i] = Rational(basis[i].mult[r]);
            total.coeff[i] += q.coeff[i];
        }
        q.constant = Rational(0);
        system.push_back(std::move(q));
    }
    system.push_back(std::move(total));

    auto point = solve(std::move(system), k);
    if (!point) return res;  // admissible

    res.admissible = false;
    long long lcm = 1;
    for (const auto& v : *point) lcm = std::lcm(lcm, v.den());
    res.witness_coefficients.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        res.witness_coefficients[i] = (*point)[i].num() * (lcm / (*point)[i].den());
    res.witness.mult.assign(nr, 0);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t i = 0; i < k; ++i)
            res.witness.mult[r] += res.witness_coefficients[i] * basis[i].mult[r];
    return res;
}

}  // namespace gridknot::heegaard
