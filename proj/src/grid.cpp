#include "gridknot/grid.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gridknot {

const char* to_string(GridError e) {
    switch (e) {
        case GridError::bad_size: return "bad_size";
        case GridError::o_not_permutation: return "o_not_permutation";
        case GridError::x_not_permutation: return "x_not_permutation";
        case GridError::shared_cell: return "shared_cell";
        case GridError::multi_component: return "multi_component";
    }
    return "unknown";
}

static bool is_permutation(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int a : v) {
        if (a < 0 || a >= n || seen[a]) return false;
        seen[a] = 1;
    }
    return true;
}

ValidationReport validate(const GridDiagram& d) {
    ValidationReport rep;
    if (d.n < 2 || static_cast<int>(d.o.size()) != d.n || static_cast<int>(d.x.size()) != d.n) {
        rep.errors.push_back(GridError::bad_size);
        return rep;
    }
    bool operm = is_permutation(d.o, d.n);
    bool xperm = is_permutation(d.x, d.n);
    if (!operm) rep.errors.push_back(GridError::o_not_permutation);
    if (!xperm) rep.errors.push_back(GridError::x_not_permutation);
    if (!operm || !xperm) return rep;

    for (int c = 0; c < d.n; ++c)
        if (d.o[c] == d.x[c]) {
            rep.errors.push_back(GridError::shared_cell);
            break;
        }
    if (!rep.errors.empty()) return rep;

    // Component count = cycle count of the column successor map c -> x^{-1}(o(c)).
    std::vector<int> xinv = inverse_perm(d.x);
    int visited = 0;
    int c = 0;
    do {
        c = xinv[d.o[c]];
        ++visited;
    } while (c != 0 && visited <= d.n);
    if (visited != d.n) rep.errors.push_back(GridError::multi_component);
    return rep;
}

bool is_valid(const GridDiagram& d) { return validate(d).ok(); }

void require_valid(const GridDiagram& d) {
    ValidationReport rep = validate(d);
    if (rep.ok()) return;
    std::string msg = "invalid grid diagram:";
    for (auto e : rep.errors) {
        msg += ' ';
        msg += to_string(e);
    }
    throw std::invalid_argument(msg);
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) inv[perm[i]] = i;
    return inv;
}

GridDiagram unknot_grid() { return GridDiagram{2, {0, 1}, {1, 0}}; }

GridDiagram torus_knot_grid(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus_knot_grid: need p, q >= 2");
    int n = p + q;
    GridDiagram d;
    d.n = n;
    d.o.resize(n);
    d.x.resize(n);
    for (int c = 0; c < n; ++c) {
        d.x[c] = c;
        d.o[c] = (c + p) % n;
    }
    require_valid(d);  // p, q not coprime would give a link
    return d;
}

GridDiagram mirror(const GridDiagram& d) {
    GridDiagram m = d;
    for (int c = 0; c < d.n; ++c) {
        m.o[c] = d.n - 1 - d.o[c];
        m.x[c] = d.n - 1 - d.x[c];
    }
    return m;
}

GridDiagram reverse(const GridDiagram& d) {
    GridDiagram r = d;
    std::swap(r.o, r.x);
    return r;
}

// Closed vertical spans of adjacent columns are non-interleaving when they
// are disjoint or strictly nested; only then is the swap a planar isotopy.
static bool spans_commute(int a1, int b1, int a2, int b2) {
    int lo1 = std::min(a1, b1), hi1 = std::max(a1, b1);
    int lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
    if (lo1 == lo2 || lo1 == hi2 || hi1 == lo2 || hi1 == hi2) return false;
    if (hi1 < lo2 || hi2 < lo1) return true;                  // disjoint
    if (lo1 < lo2 && hi2 < hi1) return true;                  // 2 inside 1
    if (lo2 < lo1 && hi1 < hi2) return true;                  // 1 inside 2
    return false;
}

std::optional<GridDiagram> commute_columns(const GridDiagram& d, int c) {
    if (c < 0 || c + 1 >= d.n) return std::nullopt;
    if (!spans_commute(d.o[c], d.x[c], d.o[c + 1], d.x[c + 1])) return std::nullopt;
    GridDiagram out = d;
    std::swap(out.o[c], out.o[c + 1]);
    std::swap(out.x[c], out.x[c + 1]);
    return out;
}

std::optional<GridDiagram> commute_rows(const GridDiagram& d, int r) {
    if (r < 0 || r + 1 >= d.n) return std::nullopt;
    std::vector<int> oinv = inverse_perm(d.o), xinv = inverse_perm(d.x);
    if (!spans_commute(oinv[r], xinv[r], oinv[r + 1], xinv[r + 1])) return std::nullopt;
    GridDiagram out = d;
    for (int c = 0; c < d.n; ++c) {
        if (out.o[c] == r) out.o[c] = r + 1;
        else if (out.o[c] == r + 1) out.o[c] = r;
        if (out.x[c] == r) out.x[c] = r + 1;
        else if (out.x[c] == r + 1) out.x[c] = r;
    }
    return out;
}

GridDiagram rotate_columns_left(const GridDiagram& d) {
    GridDiagram out = d;
    for (int c = 0; c < d.n; ++c) {
        out.o[c] = d.o[(c + 1) % d.n];
        out.x[c] = d.x[(c + 1) % d.n];
    }
    return out;
}

GridDiagram rotate_columns_right(const GridDiagram& d) {
    GridDiagram out = d;
    for (int c = 0; c < d.n; ++c) {
        out.o[(c + 1) % d.n] = d.o[c];
        out.x[(c + 1) % d.n] = d.x[c];
    }
    return out;
}

GridDiagram rotate_rows_up(const GridDiagram& d) {
    GridDiagram out = d;
    for (int c = 0; c < d.n; ++c) {
        out.o[c] = (d.o[c] + 1) % d.n;
        out.x[c] = (d.x[c] + 1) % d.n;
    }
    return out;
}

GridDiagram rotate_rows_down(const GridDiagram& d) {
    GridDiagram out = d;
    for (int c = 0; c < d.n; ++c) {
        out.o[c] = (d.o[c] + d.n - 1) % d.n;
        out.x[c] = (d.x[c] + d.n - 1) % d.n;
    }
    return out;
}

std::string to_text(const GridDiagram& d) {
    std::ostringstream os;
    os << d.n << '\n';
    for (int c = 0; c < d.n; ++c) os << d.o[c] << (c + 1 == d.n ? '\n' : ' ');
    for (int c = 0; c < d.n; ++c) os << d.x[c] << (c + 1 == d.n ? '\n' : ' ');
    return os.str();
}

std::string to_json(const GridDiagram& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["o"] = d.o;
    j["x"] = d.x;
    return j.dump();
}

GridDiagram parse_grid_text(const std::string& text, bool validated) {
    std::istringstream is(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.size() != 3) throw std::runtime_error("grid text: expected 3 data lines (n, o, x)");
    GridDiagram d;
    {
        std::istringstream ls(lines[0]);
        if (!(ls >> d.n)) throw std::runtime_error("grid text: bad size line");
    }
    auto read_perm = [&](const std::string& l, const char* what) {
        std::istringstream ls(l);
        std::vector<int> v;
        int a;
        while (ls >> a) v.push_back(a);
        if (static_cast<int>(v.size()) != d.n)
            throw std::runtime_error(std::string("grid text: ") + what + " line has wrong length");
        return v;
    };
    d.o = read_perm(lines[1], "o");
    d.x = read_perm(lines[2], "x");
    if (validated) require_valid(d);
    return d;
}

GridDiagram parse_grid_json(const std::string& text, bool validated) {
    nlohmann::json j = nlohmann::json::parse(text);
    GridDiagram d;
    d.n = j.at("n").get<int>();
    d.o = j.at("o").get<std::vector<int>>();
    d.x = j.at("x").get<std::vector<int>>();
    if (validated) require_valid(d);
    return d;
}

GridDiagram load_grid_file(const std::string& path, bool validated) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grid file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return parse_grid_json(ss.str(), validated);
    return parse_grid_text(ss.str(), validated);
}

}  // namespace gridknot
