#include "gridknot/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "gridknot/f2.hpp"

namespace gridknot {

std::size_t HomologyTable::total_rank() const {
    std::size_t t = 0;
    for (const auto& [key, r] : ranks) t += r;
    return t;
}

std::size_t HomologyTable::rank(int maslov, int alex2) const {
    auto it = ranks.find({maslov, alex2});
    return it == ranks.end() ? 0 : it->second;
}

namespace {

struct Block {
    std::vector<std::uint64_t> keys;  // packed states, ascending (lex order)
};

using BlockMap = std::map<std::pair<int, int>, Block>;

BlockMap collect_blocks(const GridDiagram& d) {
    BlockMap blocks;
    for_each_state(d.n, [&](const GridState& s, std::uint64_t) {
        Bigrading g = bigrading(d, s);
        blocks[{g.maslov, g.alex2}].keys.push_back(s.packed());
    });
    // Enumeration is lexicographic but packed() is not monotone in it; sort.
    for (auto& [key, b] : blocks) std::sort(b.keys.begin(), b.keys.end());
    return blocks;
}

std::size_t index_in(const Block& b, std::uint64_t packed) {
    auto it = std::lower_bound(b.keys.begin(), b.keys.end(), packed);
    return static_cast<std::size_t>(it - b.keys.begin());
}

// Rank of the blocked differential from `src` into `dst`.
std::size_t block_rank(const GridComplex& gc, int n, const Block& src, const Block& dst) {
    f2::Eliminator elim(dst.keys.size());
    std::vector<GridState> dx;
    std::vector<int> sigma(n);
    for (std::uint64_t key : src.keys) {
        for (int i = 0; i < n; ++i) sigma[i] = static_cast<int>((key >> (4 * i)) & 0xF);
        GridState state(sigma);
        gc.boundary_blocked(state, dx);
        if (dx.empty()) continue;
        f2::Row row(dst.keys.size());
        for (const auto& y : dx) row.flip(index_in(dst, y.packed()));
        elim.add(std::move(row));
    }
    return elim.rank();
}

int thread_count() {
    if (const char* env = std::getenv("GRIDKNOT_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

HomologyTable homology(const GridDiagram& d, int cap) {
    require_valid(d);
    if (d.n > cap)
        throw CapacityError("homology: grid size " + std::to_string(d.n) +
                            " exceeds cap " + std::to_string(cap));
    GridComplex gc(d);
    BlockMap blocks = collect_blocks(d);

    // rank of the outgoing map per block, computed in parallel
    struct Job {
        const Block* src;
        const Block* dst;  // block at (M-1, 2A); null if absent
        std::size_t rank = 0;
    };
    std::vector<std::pair<std::pair<int, int>, Job>> jobs;
    for (auto& [key, b] : blocks) {
        auto dst = blocks.find({key.first - 1, key.second});
        jobs.push_back({key, Job{&b, dst == blocks.end() ? nullptr : &dst->second}});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            Job& j = jobs[i].second;
            if (j.dst) j.rank = block_rank(gc, d.n, *j.src, *j.dst);
        }
    };
    int nthreads = std::min<int>(thread_count(), static_cast<int>(jobs.size()));
    if (nthreads > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        worker();
    }

    std::map<std::pair<int, int>, std::size_t> rank_out;
    for (auto& [key, j] : jobs) rank_out[key] = j.rank;

    HomologyTable table;
    table.n = d.n;
    for (auto& [key, b] : blocks) {
        std::size_t dim = b.keys.size();
        std::size_t out = rank_out[key];
        auto above = rank_out.find({key.first + 1, key.second});
        std::size_t in = above == rank_out.end() ? 0 : above->second;
        std::size_t h = dim - out - in;
        if (h > 0) table.ranks[key] = h;
    }
    return table;
}

bool is_thin(const HomologyTable& t) {
    bool have = false;
    int delta2 = 0;  // 2(M - A)
    for (const auto& [key, r] : t.ranks) {
        if (r == 0) continue;
        int d2 = 2 * key.first - key.second;
        if (!have) {
            delta2 = d2;
            have = true;
        } else if (d2 != delta2) {
            return false;
        }
    }
    return true;
}

HomologyTable collapse_smearing(const HomologyTable& t) {
    // Binomial coefficients of the smearing factor.
    std::vector<long long> binom(t.n, 0);
    binom[0] = 1;
    for (int i = 1; i < t.n; ++i) binom[i] = binom[i - 1] * (t.n - i) / i;

    std::map<std::pair<int, int>, long long> remaining;
    for (const auto& [key, r] : t.ranks) remaining[key] = static_cast<long long>(r);

    // Keys sorted by descending Alexander grading; each extracted rank only
    // corrects entries strictly below in that order.
    std::vector<std::pair<int, int>> keys;
    for (const auto& [key, r] : t.ranks) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](auto a, auto b) {
        return a.second != b.second ? a.second > b.second : a.first > b.first;
    });

    HomologyTable out;
    out.n = t.n;
    for (auto key : keys) {
        long long v = remaining[key];
        if (v == 0) continue;
        if (v < 0) throw std::runtime_error("collapse_smearing: table is not a smeared table");
        out.ranks[key] = static_cast<std::size_t>(v);
        for (int i = 0; i < t.n; ++i)
            remaining[{key.first - i, key.second - 2 * i}] -= v * binom[i];
    }
    for (const auto& [key, v] : remaining)
        if (v != 0) throw std::runtime_error("collapse_smearing: table is not a smeared table");
    return out;
}

std::string to_tsv(const HomologyTable& t) {
    std::ostringstream os;
    for (const auto& [key, r] : t.ranks)
        os << key.first << '\t' << key.second << '\t' << r << '\n';
    return os.str();
}

std::string to_json(const HomologyTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, r] : t.ranks)
        rows.push_back({{"maslov", key.first}, {"alex2", key.second}, {"rank", r}});
    nlohmann::json j;
    j["n"] = t.n;
    j["ranks"] = rows;
    return j.dump();
}

}  // namespace gridknot
