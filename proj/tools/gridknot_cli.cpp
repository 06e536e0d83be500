// gridknot: grid-diagram knot Floer calculator and Lagrangian-concordance
// obstruction tool.
//
// Exit codes: 0 success, 2 usage error, 3 parse/validation error,
// 4 capacity exceeded, 5 internal convention failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridknot/concordance.hpp"
#include "gridknot/domain/admissibility.hpp"
#include "gridknot/domain/domain_ops.hpp"
#include "gridknot/domain/periodic.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/homology.hpp"
#include "gridknot/invariants_report.hpp"
#include "gridknot/moves.hpp"
#include "gridknot/tau.hpp"
#include "gridknot/theta.hpp"

using namespace gridknot;

namespace {

struct Options {
    std::string format = "tsv";
    int cap = 0;  // 0 = per-operation default
    std::string sign = "plus";
    int depth = 0;
};

int run_validate(const std::string& path, const Options& opt) {
    GridDiagram d = load_grid_file(path, /*validated=*/false);
    ValidationReport rep = validate(d);
    if (opt.format == "json") {
        nlohmann::json j;
        j["valid"] = rep.ok();
        auto errs = nlohmann::json::array();
        for (auto e : rep.errors) errs.push_back(to_string(e));
        j["errors"] = errs;
        std::cout << j.dump() << "\n";
    } else if (rep.ok()) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid:";
        for (auto e : rep.errors) std::cout << ' ' << to_string(e);
        std::cout << "\n";
    }
    return rep.ok() ? 0 : 3;
}

int run_invariants(const std::string& path, const Options& opt) {
    GridDiagram d = load_grid_file(path);
    if (opt.format == "json") {
        int theta_cap = opt.cap ? opt.cap : kDefaultThetaCap;
        int tau_cap = opt.cap ? opt.cap : kDefaultTauCap;
        int hom_cap = opt.cap ? opt.cap : kDefaultHomologyCap;
        std::cout << to_json(legendrian_report(d, theta_cap, tau_cap, hom_cap)) << "\n";
    } else {
        ClassicalInvariants ci = classical_invariants(d);
        std::cout << "tb=" << ci.tb << " r=" << ci.r << " sl=" << ci.sl << "\n";
    }
    return 0;
}

int run_hfk(const std::string& path, const Options& opt, bool collapsed) {
    GridDiagram d = load_grid_file(path);
    HomologyTable t = homology(d, opt.cap ? opt.cap : kDefaultHomologyCap);
    if (collapsed) t = collapse_smearing(t);
    if (opt.format == "json") std::cout << to_json(t) << "\n";
    else std::cout << to_tsv(t);
    return 0;
}

int run_theta(const std::string& path, const Options& opt) {
    GridDiagram d = load_grid_file(path);
    ThetaSign sign = opt.sign == "minus" ? ThetaSign::minus : ThetaSign::plus;
    ThetaVerdict v = theta(d, sign, opt.cap ? opt.cap : kDefaultThetaCap);
    if (opt.format == "json") {
        nlohmann::json j;
        j["sign"] = opt.sign;
        j["vanishes"] = v.vanishes;
        j["is_cycle"] = v.is_cycle;
        j["maslov"] = v.grading.maslov;
        j["alex2"] = v.grading.alex2;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "vanishes=" << (v.vanishes ? "true" : "false") << " sign=" << opt.sign
                  << " M=" << v.grading.maslov << " 2A=" << v.grading.alex2 << "\n";
    }
    return 0;
}

int run_tau(const std::string& path, const Options& opt) {
    GridDiagram d = load_grid_file(path);
    TauResult t = tau(d, opt.cap ? opt.cap : kDefaultTauCap);
    if (opt.format == "json") {
        nlohmann::json j;
        j["tau"] = t.tau;
        j["certificate"] = {{"level_alex2", t.level_alex2},
                            {"top_dim", t.top_dim},
                            {"cycle_dim", t.cycle_dim},
                            {"boundary_rank", t.boundary_rank}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "tau=" << t.tau << " level_2A=" << t.level_alex2 << "\n";
    }
    return 0;
}

int run_obstruct(const std::string& p1, const std::string& p2, const Options& opt) {
    GridDiagram k1 = load_grid_file(p1);
    GridDiagram k2 = load_grid_file(p2);
    int cap = opt.cap ? opt.cap : kDefaultThetaCap;
    if (opt.depth == 0) {
        ObstructionVerdict v = obstruct(k1, k2, cap);
        if (opt.format == "json") {
            std::cout << to_json(v) << "\n";
        } else {
            auto tv = [](const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : "-"; };
            std::cout << to_string(v.kind) << " tb1=" << v.k1.tb << " r1=" << v.k1.r
                      << " theta1_vanishes=" << tv(v.theta1_vanishes) << " tb2=" << v.k2.tb
                      << " r2=" << v.k2.r << " theta2_vanishes=" << tv(v.theta2_vanishes)
                      << "\n";
        }
        return 0;
    }
    auto rows = obstruct_stabilized(k1, k2, opt.depth, cap);
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j = nlohmann::json::parse(to_json(row.verdict));
            j["stabs1"] = row.stabs1;
            j["stabs2"] = row.stabs2;
            arr.push_back(j);
        }
        nlohmann::json j;
        j["schema_version"] = 1;
        j["rows"] = arr;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << row.stabs1 << '\t' << row.stabs2 << '\t' << to_string(row.verdict.kind)
                      << "\n";
    }
    return 0;
}

int run_batch(const std::string& listing, const Options& opt) {
    std::ifstream in(listing);
    if (!in) throw std::runtime_error("cannot open pair listing: " + listing);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ls >> b)) throw std::runtime_error("pair listing line needs two paths: " + line);
        pairs.push_back({a, b});
    }
    BatchReport rep = batch_report(pairs, opt.cap ? opt.cap : kDefaultThetaCap);
    if (opt.format == "json") std::cout << to_json(rep) << "\n";
    else std::cout << to_tsv(rep);
    return rep.all_ok() ? 0 : 3;
}

int run_domains_check(const std::string& path, const Options& opt) {
    using namespace heegaard;
    CurveDiagram d = load_curve_diagram(path);
    std::set<Family> families;
    for (const auto& c : d.curves) families.insert(c.family);
    auto basis = periodic_domain_basis(d, families);
    auto adm = is_weakly_admissible(d, basis);

    nlohmann::json j;
    j["name"] = d.name;
    j["regions"] = d.regions.size();
    j["points"] = d.points.size();
    j["curves"] = d.curves.size();
    j["periodic_basis_size"] = basis.size();
    j["weakly_admissible"] = adm.admissible;
    if (!adm.admissible) {
        j["witness_coefficients"] = adm.witness_coefficients;
        j["witness"] = adm.witness.mult;
    }
    nlohmann::json doms = nlohmann::json::array();
    for (const auto& [name, dom] : d.named_domains) {
        nlohmann::json dj;
        dj["name"] = name;
        dj["euler_measure"] = euler_measure(d, dom).str();
        dj["periodic"] = is_periodic_domain(d, dom);
        doms.push_back(dj);
    }
    j["domains"] = doms;

    if (opt.format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "name=" << d.name << " regions=" << d.regions.size()
                  << " curves=" << d.curves.size() << " basis=" << basis.size()
                  << " weakly_admissible=" << (adm.admissible ? "true" : "false") << "\n";
        for (const auto& dj : doms)
            std::cout << "domain\t" << dj["name"].get<std::string>() << "\te="
                      << dj["euler_measure"].get<std::string>() << "\tperiodic="
                      << (dj["periodic"].get<bool>() ? "true" : "false") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-diagram knot Floer calculator and concordance obstruction tool"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--cap", opt.cap, "grid-size capacity override");
    app.add_option("--sign", opt.sign, "canonical class sign (theta)")
        ->check(CLI::IsMember({"plus", "minus"}));
    app.add_option("--depth", opt.depth, "negative-stabilization depth (obstruct)");

    auto add_sub = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    std::string path1, path2;
    bool collapsed = false;

    auto* c_validate = add_sub("validate", "check the grid invariants");
    c_validate->add_option("grid", path1)->required();

    auto* c_inv = add_sub("invariants", "classical Legendrian invariants");
    c_inv->add_option("grid", path1)->required();

    auto* c_hfk = add_sub("hfk", "bigraded homology ranks");
    c_hfk->add_option("grid", path1)->required();
    c_hfk->add_flag("--collapsed", collapsed, "divide out the 2^(n-1) smearing factor");

    auto* c_theta = add_sub("theta", "canonical class and its vanishing");
    c_theta->add_option("grid", path1)->required();

    auto* c_tau = add_sub("tau", "concordance invariant tau");
    c_tau->add_option("grid", path1)->required();

    auto* c_obstruct = add_sub("obstruct", "Lagrangian concordance obstruction");
    c_obstruct->add_option("k1", path1)->required();
    c_obstruct->add_option("k2", path2)->required();

    auto* c_batch = add_sub("obstruct-batch", "obstruction report for listed pairs");
    c_batch->add_option("pairs", path1)->required();

    auto* c_dom = add_sub("domains-check", "Heegaard diagram domain calculus");
    c_dom->add_option("diagram", path1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) return run_validate(path1, opt);
        if (c_inv->parsed()) return run_invariants(path1, opt);
        if (c_hfk->parsed()) return run_hfk(path1, opt, collapsed);
        if (c_theta->parsed()) return run_theta(path1, opt);
        if (c_tau->parsed()) return run_tau(path1, opt);
        if (c_obstruct->parsed()) return run_obstruct(path1, path2, opt);
        if (c_batch->parsed()) return run_batch(path1, opt);
        if (c_dom->parsed()) return run_domains_check(path1, opt);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 4;
    } catch (const ConventionError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
