#include "gridknot/domain/periodic.hpp"

#include <numeric>
#include <stdexcept>

#include "gridknot/domain/domain_ops.hpp"

namespace gridknot::heegaard {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form; returns pivot column per row.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Scale a rational vector to a primitive integer vector, first nonzero > 0.
std::vector<long long> integerize(const std::vector<Rational>& v) {
    long long lcm = 1;
    for (const auto& r : v) lcm = std::lcm(lcm, r.den());
    std::vector<long long> out(v.size());
    long long g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].num() * (lcm / v[i].den());
        g = std::gcd(g, out[i] < 0 ? -out[i] : out[i]);
    }
    if (g > 1)
        for (auto& a : out) a /= g;
    for (auto a : out) {
        if (a > 0) break;
        if (a < 0) {
            for (auto& b : out) b = -b;
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<DomainVector> periodic_domain_basis(const CurveDiagram& d,
                                                const std::set<Family>& families) {
    std::size_t nr = d.regions.size();
    // curves whose full classes may appear in boundaries
    std::vector<int> free_curves;
    for (std::size_t c = 0; c < d.curves.size(); ++c)
        if (families.count(d.curves[c].family)) free_curves.push_back(static_cast<int>(c));
    std::size_t nc = free_curves.size();
    std::size_t ncols = nr + nc;

    // one equation per edge: boundary coefficient minus the curve coefficient
    // (when the edge's curve is in a chosen family) vanishes
    std::vector<int> curve_of_edge(d.edges.size(), -1);
    for (std::size_t c = 0; c < d.curves.size(); ++c)
        for (int e : d.curves[c].edges) curve_of_edge[e] = static_cast<int>(c);
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (curve_of_edge[e] < 0)
            throw std::runtime_error("periodic_domain_basis: edge not on any curve");

    Matrix eq;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        std::vector<Rational> row(ncols);
        bool nonzero = false;
        for (std::size_t r = 0; r < nr; ++r) {
            long long coeff = 0;
            for (auto [edge, sign] : d.regions[r].boundary)
                if (edge == static_cast<int>(e)) coeff += sign;
            if (coeff) {
                row[r] = Rational(coeff);
                nonzero = true;
            }
        }
        for (std::size_t k = 0; k < nc; ++k)
            if (free_curves[k] == curve_of_edge[e]) {
                row[nr + k] = Rational(-1);
                nonzero = true;
            }
        if (nonzero) eq.push_back(std::move(row));
    }
    // z basepoints: multiplicity zero
    for (std::size_t r = 0; r < nr; ++r)
        for (const auto& bp : d.regions[r].basepoints)
            if (bp == "z") {
                std::vector<Rational> row(ncols);
                row[r] = Rational(1);
                eq.push_back(std::move(row));
            }

    std::vector<int> pivots = rref(eq);
    std::vector<char> is_pivot(ncols, 0);
    for (int p : pivots) is_pivot[p] = 1;

    // free columns give the kernel basis; only keep the domain part
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Rational> vec(ncols);
        vec[col] = Rational(1);
        for (std::size_t row = 0; row < eq.size(); ++row)
            vec[pivots[row]] = -eq[row][col];
        kernel.push_back(std::move(vec));
    }
    // drop kernel vectors whose domain part vanishes (pure curve-coefficient
    // slack cannot occur, but guard anyway)
    std::vector<std::vector<Rational>> domains;
    for (auto& vec : kernel) {
        bool nonzero = false;
        for (std::size_t r = 0; r < nr; ++r) nonzero = nonzero || !vec[r].is_zero();
        if (nonzero) domains.push_back(std::vector<Rational>(vec.begin(), vec.begin() + nr));
    }

    // normal form: reduce the curve-coefficient matrix, beta columns first
    std::vector<int> curve_order;
    for (Family f : {Family::beta, Family::gamma, Family::alpha})
        for (std::size_t c = 0; c < d.curves.size(); ++c)
            if (d.curves[c].family == f) curve_order.push_back(static_cast<int>(c));

    Matrix profile(domains.size());
    for (std::size_t i = 0; i < domains.size(); ++i) {
        DomainVector v;
        v.mult.assign(nr, 0);
        std::vector<Rational> approx = domains[i];
        // exact rational boundary coefficients per curve
        std::vector<Rational> coeffs(d.curves.size());
        for (std::size_t c = 0; c < d.curves.size(); ++c) {
            const Curve& curve = d.curves[c];
            if (curve.edges.empty()) continue;
            Rational a;
            for (std::size_t r = 0; r < nr; ++r) {
                long long s = 0;
                for (auto [edge, sign] : d.regions[r].boundary)
                    if (edge == curve.edges.front()) s += sign;
                if (s) a += approx[r] * Rational(s);
            }
            coeffs[c] = a;
        }
        profile[i].reserve(curve_order.size() + nr);
        for (int c : curve_order) profile[i].push_back(coeffs[c]);
        for (std::size_t r = 0; r < nr; ++r) profile[i].push_back(approx[r]);
    }
    rref(profile);

    std::vector<DomainVector> basis;
    for (auto& row : profile) {
        std::vector<Rational> dom(row.begin() + curve_order.size(), row.end());
        bool nonzero = false;
        for (auto& v : dom) nonzero = nonzero || !v.is_zero();
        if (!nonzero) continue;
        DomainVector out;
        out.mult = integerize(dom);
        basis.push_back(std::move(out));
    }
    return basis;
}

}  // namespace gridknot::heegaard
