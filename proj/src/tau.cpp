#include "gridknot/tau.hpp"

#include <algorithm>

#include "gridknot/f2.hpp"
#include "gridknot/theta.hpp"

namespace gridknot {

namespace {

// Orientation of the reported level, pinned by tau(RH trefoil) = +1.
constexpr int kTauOrientation = -1;

struct Slices {
    // top Maslov slice (M = 0) ordered by descending Alexander grading,
    // neighbours by packed key
    std::vector<std::uint64_t> c1;       // M = +1
    std::vector<std::uint64_t> c0;       // M = 0, coset-reduction order
    std::vector<int> c0_alex2;           // parallel to c0
    std::vector<std::uint64_t> cm1;      // M = -1, ascending packed
};

std::size_t find_sorted(const std::vector<std::uint64_t>& v, std::uint64_t key) {
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), key) - v.begin());
}

}  // namespace

TauResult tau(const GridDiagram& d, int cap) {
    require_valid(d);
    if (d.n > cap)
        throw CapacityError("tau: grid size " + std::to_string(d.n) + " exceeds cap " +
                            std::to_string(cap));
    GridComplex gc(d);

    Slices sl;
    std::vector<std::pair<int, std::uint64_t>> c0_order;  // (-alex2, packed)
    for_each_state(d.n, [&](const GridState& s, std::uint64_t) {
        Bigrading g = bigrading(d, s);
        if (g.maslov == 1) sl.c1.push_back(s.packed());
        else if (g.maslov == 0) c0_order.push_back({-g.alex2, s.packed()});
        else if (g.maslov == -1) sl.cm1.push_back(s.packed());
    });
    std::sort(c0_order.begin(), c0_order.end());
    std::sort(sl.cm1.begin(), sl.cm1.end());
    sl.c0.reserve(c0_order.size());
    sl.c0_alex2.reserve(c0_order.size());
    for (auto& [neg_a2, key] : c0_order) {
        sl.c0.push_back(key);
        sl.c0_alex2.push_back(-neg_a2);
    }
    // lookup from packed key to position in the coset-reduction order
    std::vector<std::pair<std::uint64_t, std::uint32_t>> c0_lookup(sl.c0.size());
    for (std::uint32_t i = 0; i < sl.c0.size(); ++i) c0_lookup[i] = {sl.c0[i], i};
    std::sort(c0_lookup.begin(), c0_lookup.end());
    auto c0_index = [&](std::uint64_t key) {
        auto it = std::lower_bound(c0_lookup.begin(), c0_lookup.end(),
                                   std::make_pair(key, std::uint32_t{0}));
        return it->second;
    };

    std::vector<int> sigma(d.n);
    auto unpack = [&](std::uint64_t key) {
        for (int i = 0; i < d.n; ++i) sigma[i] = static_cast<int>((key >> (4 * i)) & 0xF);
        return GridState(sigma);
    };

    // image of the differential from the M = 1 slice
    f2::Eliminator boundaries(sl.c0.size());
    std::vector<GridState> dx;
    for (std::uint64_t key : sl.c1) {
        gc.boundary_o_blocked(unpack(key), dx);
        if (dx.empty()) continue;
        f2::Row row(sl.c0.size());
        for (const auto& y : dx) row.flip(c0_index(y.packed()));
        boundaries.add(std::move(row));
    }

    // cycles in the M = 0 slice, via identity-augmented elimination
    std::size_t aug = sl.cm1.size();
    f2::Eliminator kernel_elim(aug + sl.c0.size());
    std::vector<f2::Row> kernel;
    for (std::size_t v = 0; v < sl.c0.size(); ++v) {
        gc.boundary_o_blocked(unpack(sl.c0[v]), dx);
        f2::Row row(aug + sl.c0.size());
        for (const auto& y : dx) row.flip(find_sorted(sl.cm1, y.packed()));
        row.set(aug + v);
        kernel_elim.reduce(row);  // tag bits keep every row independent
        if (row.lowest() >= aug) {
            f2::Row z(sl.c0.size());
            for (std::size_t i = 0; i < sl.c0.size(); ++i)
                if (row.test(aug + i)) z.set(i);
            kernel.push_back(std::move(z));
        }
        kernel_elim.add(std::move(row));
    }

    TauResult res;
    res.top_dim = sl.c0.size();
    res.cycle_dim = kernel.size();
    res.boundary_rank = boundaries.rank();
    if (kernel.size() != boundaries.rank() + 1)
        throw ConventionError("tau: top homology of the O-blocked complex is not rank one");

    // the unique nonzero class; minimize its worst filtration level
    f2::Row rep;
    bool found = false;
    for (auto& z : kernel) {
        if (!boundaries.contains(z)) {
            boundaries.reduce(z);
            rep = std::move(z);
            found = true;
            break;
        }
    }
    if (!found || !rep.any())
        throw ConventionError("tau: failed to produce a generating cycle");

    std::size_t lead = rep.lowest();
    res.level_alex2 = sl.c0_alex2[lead];
    if (res.level_alex2 % 2 != 0)
        throw ConventionError("tau: odd doubled Alexander level on a knot grid");
    res.tau = kTauOrientation * (res.level_alex2 / 2);
    return res;
}

}  // namespace gridknot
