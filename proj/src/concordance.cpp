#include "gridknot/concordance.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace gridknot {

const char* to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::obstructed_classical: return "obstructed_classical";
        case ObstructionKind::obstructed_theta: return "obstructed_theta";
        case ObstructionKind::not_obstructed: return "not_obstructed";
    }
    return "unknown";
}

ObstructionVerdict obstruct(const GridDiagram& k1, const GridDiagram& k2, int theta_cap) {
    ObstructionVerdict v;
    v.k1 = classical_invariants(k1);
    v.k2 = classical_invariants(k2);
    if (v.k1.tb != v.k2.tb || v.k1.r != v.k2.r) {
        v.kind = ObstructionKind::obstructed_classical;
        return v;
    }
    v.theta1_vanishes = theta(k1, ThetaSign::plus, theta_cap).vanishes;
    v.theta2_vanishes = theta(k2, ThetaSign::plus, theta_cap).vanishes;
    v.kind = (!*v.theta1_vanishes && *v.theta2_vanishes) ? ObstructionKind::obstructed_theta
                                                         : ObstructionKind::not_obstructed;
    return v;
}

std::vector<StabilizedVerdict> obstruct_stabilized(const GridDiagram& k1, const GridDiagram& k2,
                                                   int depth, int theta_cap) {
    if (depth < 0) throw std::invalid_argument("obstruct_stabilized: negative depth");
    std::vector<GridDiagram> s1{k1}, s2{k2};
    for (int i = 0; i < depth; ++i) {
        s1.push_back(stabilize(s1.back(), StabilizationKind::negative));
        s2.push_back(stabilize(s2.back(), StabilizationKind::negative));
    }
    std::vector<StabilizedVerdict> out;
    for (int i = 0; i <= depth; ++i)
        for (int j = 0; j <= depth; ++j)
            out.push_back({i, j, obstruct(s1[i], s2[j], theta_cap)});
    return out;
}

bool BatchReport::all_ok() const {
    for (const auto& row : rows)
        if (!row.error.empty()) return false;
    return true;
}

namespace {
int batch_threads() {
    if (const char* env = std::getenv("GRIDKNOT_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}
}  // namespace

BatchReport batch_report(const std::vector<std::pair<std::string, std::string>>& pairs,
                         int theta_cap) {
    BatchReport rep;
    rep.rows.resize(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            BatchRow& row = rep.rows[i];
            row.path1 = pairs[i].first;
            row.path2 = pairs[i].second;
            try {
                GridDiagram d1 = load_grid_file(row.path1);
                GridDiagram d2 = load_grid_file(row.path2);
                row.verdict = obstruct(d1, d2, theta_cap);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    int nthreads = std::min<std::size_t>(batch_threads(), pairs.size());
    if (nthreads > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        worker();
    }
    return rep;
}

static nlohmann::json verdict_json(const ObstructionVerdict& v) {
    auto side = [](const ClassicalInvariants& ci, const std::optional<bool>& th) {
        nlohmann::json j{{"tb", ci.tb}, {"r", ci.r}, {"sl", ci.sl}};
        j["theta_plus_vanishes"] = th ? nlohmann::json(*th) : nlohmann::json();
        return j;
    };
    nlohmann::json j;
    j["kind"] = to_string(v.kind);
    j["k1"] = side(v.k1, v.theta1_vanishes);
    j["k2"] = side(v.k2, v.theta2_vanishes);
    return j;
}

std::string to_json(const ObstructionVerdict& v) {
    nlohmann::json j = verdict_json(v);
    j["schema_version"] = 1;
    return j.dump();
}

std::string to_tsv(const BatchReport& rep) {
    std::ostringstream os;
    auto opt = [](const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : "-"; };
    for (const auto& row : rep.rows) {
        os << row.path1 << '\t' << row.path2 << '\t';
        if (!row.error.empty()) {
            os << "error\t" << row.error << '\n';
            continue;
        }
        const auto& v = *row.verdict;
        os << to_string(v.kind) << '\t' << "tb1=" << v.k1.tb << " r1=" << v.k1.r
           << " theta1_vanishes=" << opt(v.theta1_vanishes) << " tb2=" << v.k2.tb
           << " r2=" << v.k2.r << " theta2_vanishes=" << opt(v.theta2_vanishes) << '\n';
    }
    return os.str();
}

std::string to_json(const BatchReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows) {
        nlohmann::json j;
        j["k1_path"] = row.path1;
        j["k2_path"] = row.path2;
        if (row.error.empty()) j["verdict"] = verdict_json(*row.verdict);
        else j["error"] = row.error;
        rows.push_back(j);
    }
    nlohmann::json j;
    j["schema_version"] = 1;
    j["rows"] = rows;
    return j.dump();
}

}  // namespace gridknot
