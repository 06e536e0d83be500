#include "gridknot/domain/curve_diagram.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gridknot::heegaard {

Family family_from_string(const std::string& s) {
    if (s == "alpha") return Family::alpha;
    if (s == "beta") return Family::beta;
    if (s == "gamma") return Family::gamma;
    throw std::invalid_argument("unknown curve family: " + s);
}

const char* to_string(Family f) {
    switch (f) {
        case Family::alpha: return "alpha";
        case Family::beta: return "beta";
        case Family::gamma: return "gamma";
    }
    return "?";
}

int CurveDiagram::region_index(const std::string& n) const {
    for (int i = 0; i < static_cast<int>(regions.size()); ++i)
        if (regions[i].name == n) return i;
    throw std::invalid_argument("unknown region: " + n);
}

int CurveDiagram::point_index(const std::string& n) const {
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        if (points[i] == n) return i;
    throw std::invalid_argument("unknown point: " + n);
}

int CurveDiagram::curve_index(const std::string& n) const {
    for (int i = 0; i < static_cast<int>(curves.size()); ++i)
        if (curves[i].name == n) return i;
    throw std::invalid_argument("unknown curve: " + n);
}

static void check(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("curve diagram: " + what);
}

CurveDiagram parse_curve_diagram(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    CurveDiagram d;
    d.name = j.value("name", "");
    d.euler_total = Rational::parse(j.at("euler_total").get<std::string>());
    d.points = j.value("points", std::vector<std::string>{});

    // Edges are declared implicitly by the curves that own them.
    std::map<std::string, int> edge_index;
    for (const auto& cj : j.at("curves")) {
        Curve c;
        c.name = cj.at("name").get<std::string>();
        c.family = family_from_string(cj.at("family").get<std::string>());
        for (const auto& e : cj.at("edges")) {
            std::string ename = e.get<std::string>();
            check(!edge_index.count(ename), "edge " + ename + " appears in two curves");
            edge_index[ename] = static_cast<int>(d.edges.size());
            d.edges.push_back(ename);
            c.edges.push_back(edge_index[ename]);
        }
        d.curves.push_back(std::move(c));
    }

    Rational euler_sum;
    for (const auto& rj : j.at("regions")) {
        Region r;
        r.name = rj.at("name").get<std::string>();
        r.euler = Rational::parse(rj.at("euler").get<std::string>());
        euler_sum += r.euler;
        if (rj.contains("basepoints"))
            r.basepoints = rj.at("basepoints").get<std::vector<std::string>>();
        if (rj.contains("boundary"))
            for (const auto& bj : rj.at("boundary")) {
                std::string ename = bj.at("edge").get<std::string>();
                check(edge_index.count(ename) > 0, "boundary edge " + ename + " not on a curve");
                r.boundary.push_back({edge_index[ename], bj.at("sign").get<int>()});
            }
        d.regions.push_back(std::move(r));
    }
    check(euler_sum == d.euler_total, "region Euler measures do not sum to euler_total");

    d.corners.assign(d.regions.size(), std::vector<int>(d.points.size(), 0));
    for (const auto& cj : j.value("corners", nlohmann::json::array())) {
        int r = d.region_index(cj.at("region").get<std::string>());
        int p = d.point_index(cj.at("point").get<std::string>());
        int count = cj.at("count").get<int>();
        check(count >= 0 && count <= 4, "corner count out of range");
        d.corners[r][p] += count;
    }
    for (int p = 0; p < static_cast<int>(d.points.size()); ++p) {
        int total = 0;
        for (const auto& row : d.corners) total += row[p];
        check(total == 4, "point " + d.points[p] + " has " + std::to_string(total) +
                              " local corners (expected 4)");
    }

    // closed-surface consistency: each edge's signed coefficients cancel
    std::vector<long long> edge_sum(d.edges.size(), 0);
    for (const auto& r : d.regions)
        for (auto [e, s] : r.boundary) edge_sum[e] += s;
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        check(edge_sum[e] == 0, "edge " + d.edges[e] + " has unbalanced region boundaries");

    if (j.contains("domains"))
        for (auto it = j["domains"].begin(); it != j["domains"].end(); ++it) {
            DomainVector v;
            v.mult.assign(d.regions.size(), 0);
            for (auto rit = it.value().begin(); rit != it.value().end(); ++rit)
                v.mult[d.region_index(rit.key())] = rit.value().get<long long>();
            d.named_domains[it.key()] = std::move(v);
        }
    if (j.contains("tuples"))
        for (auto it = j["tuples"].begin(); it != j["tuples"].end(); ++it) {
            std::vector<int> pts;
            for (const auto& p : it.value()) pts.push_back(d.point_index(p.get<std::string>()));
            d.named_tuples[it.key()] = std::move(pts);
        }
    return d;
}

std::string to_json(const CurveDiagram& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["euler_total"] = d.euler_total.str();
    j["points"] = d.points;
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& c : d.curves) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["family"] = to_string(c.family);
        std::vector<std::string> edges;
        for (int e : c.edges) edges.push_back(d.edges[e]);
        cj["edges"] = edges;
        curves.push_back(cj);
    }
    j["curves"] = curves;
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& r : d.regions) {
        nlohmann::json rj;
        rj["name"] = r.name;
        rj["euler"] = r.euler.str();
        if (!r.basepoints.empty()) rj["basepoints"] = r.basepoints;
        if (!r.boundary.empty()) {
            nlohmann::json b = nlohmann::json::array();
            for (auto [e, s] : r.boundary) b.push_back({{"edge", d.edges[e]}, {"sign", s}});
            rj["boundary"] = b;
        }
        regions.push_back(rj);
    }
    j["regions"] = regions;
    nlohmann::json corners = nlohmann::json::array();
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (std::size_t p = 0; p < d.points.size(); ++p)
            if (d.corners[r][p] > 0)
                corners.push_back({{"region", d.regions[r].name},
                                   {"point", d.points[p]},
                                   {"count", d.corners[r][p]}});
    j["corners"] = corners;
    if (!d.named_domains.empty()) {
        nlohmann::json doms;
        for (const auto& [name, v] : d.named_domains) {
            nlohmann::json dj;
            for (std::size_t r = 0; r < d.regions.size(); ++r)
                dj[d.regions[r].name] = v.mult[r];
            doms[name] = dj;
        }
        j["domains"] = doms;
    }
    if (!d.named_tuples.empty()) {
        nlohmann::json tuples;
        for (const auto& [name, pts] : d.named_tuples) {
            std::vector<std::string> names;
            for (int p : pts) names.push_back(d.points[p]);
            tuples[name] = names;
        }
        j["tuples"] = tuples;
    }
    return j.dump();
}

CurveDiagram load_curve_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve diagram: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_diagram(ss.str());
}

}  // namespace gridknot::heegaard
