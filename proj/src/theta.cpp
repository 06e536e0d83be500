#include "gridknot/theta.hpp"

#include <algorithm>

#include "gridknot/f2.hpp"

namespace gridknot {

GridState canonical_state(const GridDiagram& d, ThetaSign sign) {
    require_valid(d);
    std::vector<int> sigma(d.n);
    if (sign == ThetaSign::plus) {
        // upper-right corner of the X cell in column c is the lattice point
        // (c+1, x[c]+1)
        for (int c = 0; c < d.n; ++c) sigma[(c + 1) % d.n] = (d.x[c] + 1) % d.n;
    } else {
        for (int c = 0; c < d.n; ++c) sigma[c] = d.x[c];
    }
    return GridState(sigma);
}

ThetaVerdict theta(const GridDiagram& d, ThetaSign sign, int cap) {
    require_valid(d);
    if (d.n > cap)
        throw CapacityError("theta: grid size " + std::to_string(d.n) + " exceeds cap " +
                            std::to_string(cap));
    ThetaVerdict v;
    v.state = canonical_state(d, sign);
    v.grading = bigrading(d, v.state);

    GridComplex gc(d);
    std::vector<GridState> dx;
    gc.boundary_blocked(v.state, dx);
    v.is_cycle = dx.empty();
    if (!v.is_cycle)
        throw ConventionError("theta: canonical state is not a cycle");

    // One pass over all states, keeping only the class's block and the block
    // one Maslov grading above it.
    std::vector<std::uint64_t> target, source;
    for_each_state(d.n, [&](const GridState& s, std::uint64_t) {
        Bigrading g = bigrading(d, s);
        if (g.alex2 != v.grading.alex2) return;
        if (g.maslov == v.grading.maslov) target.push_back(s.packed());
        else if (g.maslov == v.grading.maslov + 1) source.push_back(s.packed());
    });
    std::sort(target.begin(), target.end());

    // worst-case pivot storage for the image basis
    std::size_t est_bytes = std::min(source.size(), target.size()) * ((target.size() + 63) / 64) * 8;
    if (est_bytes > (std::size_t{4} << 30))
        throw CapacityError("theta: bigrading block too large (" +
                            std::to_string(target.size()) + " states)");

    f2::Eliminator image(target.size());
    std::vector<int> sigma(d.n);
    for (std::uint64_t key : source) {
        for (int i = 0; i < d.n; ++i) sigma[i] = static_cast<int>((key >> (4 * i)) & 0xF);
        gc.boundary_blocked(GridState(sigma), dx);
        if (dx.empty()) continue;
        f2::Row row(target.size());
        for (const auto& y : dx) {
            auto it = std::lower_bound(target.begin(), target.end(), y.packed());
            row.flip(static_cast<std::size_t>(it - target.begin()));
        }
        image.add(std::move(row));
    }

    f2::Row cls(target.size());
    auto it = std::lower_bound(target.begin(), target.end(), v.state.packed());
    cls.set(static_cast<std::size_t>(it - target.begin()));
    v.vanishes = image.contains(std::move(cls));
    return v;
}

}  // namespace gridknot
