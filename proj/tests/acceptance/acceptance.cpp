// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gridknot/concordance.hpp"
#include "gridknot/domain/admissibility.hpp"
#include "gridknot/domain/domain_ops.hpp"
#include "gridknot/domain/periodic.hpp"
#include "gridknot/invariants_report.hpp"
#include "gridknot/moves.hpp"
#include "oracles.hpp"

using namespace gridknot;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        notes.push_back(what);
    }
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixture(const char* name) {
    return std::string(GRIDKNOT_FIXTURES) + "/" + name;
}

void criterion(int index, const std::string& title, const std::function<void()>& body) {
    int before = failures;
    notes.clear();
    auto t0 = Clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        ++failures;
        notes.push_back(std::string("exception: ") + e.what());
    }
    bool pass = failures == before;
    std::printf("criterion %d [%s]: %s (%.1f s)\n", index, title.c_str(),
                pass ? "PASS" : "FAIL", seconds_since(t0));
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
}

oracles::Laurent euler_characteristic(const HomologyTable& t) {
    oracles::Laurent chi;
    for (const auto& [key, r] : t.ranks)
        chi[key.second / 2] +=
            (key.first % 2 == 0) ? static_cast<long long>(r) : -static_cast<long long>(r);
    for (auto it = chi.begin(); it != chi.end();)
        it = it->second == 0 ? chi.erase(it) : std::next(it);
    return chi;
}

oracles::Laurent smearing_factor(int n) {
    oracles::Laurent f{{0, 1}};
    for (int i = 1; i < n; ++i) f = oracles::laurent_mul(f, {{0, 1}, {-1, -1}});
    return f;
}

}  // namespace

int main() {
    // 1. stevedore case study on the shipped tb-maximal 8x8 grid
    criterion(1, "stevedore 8x8 case study", [] {
        auto t0 = Clock::now();
        GridDiagram d = load_grid_file(fixture("sixone_8.grid"));
        auto ci = classical_invariants(d);
        expect(ci.tb == -5 && ci.r == 0 && ci.sl == -5,
               "classical invariants should be (-5, 0, -5)");
        HomologyTable t = homology(d);
        expect(is_thin(t), "homology should be thin");
        expect(t.total_rank() == 9u << 7, "total rank should be 9 * 2^7");
        expect(tau(d).tau == 0, "tau should vanish (slice)");
        ThetaVerdict v = theta(d, ThetaSign::plus);
        expect(v.is_cycle, "plus class should be a cycle");
        expect(v.vanishes, "plus class should vanish");
        expect(v.grading.maslov == -4 && v.grading.alex2 == -4,
               "plus class should sit at M = 2A = -4");
        BennequinReport b = bennequin_checks(d);
        expect(b.sl == -5 && b.slack == 4, "Bennequin bound should have slack 4");
        expect(thin_shortcut(d) == ThinShortcut::zero, "thin shortcut should agree (zero)");
        expect(seconds_since(t0) < 60.0, "runtime must stay under 60 s");
    });

    // 2. trefoil: sharp Bennequin bound and nonvanishing class
    criterion(2, "trefoil 5x5", [] {
        auto t0 = Clock::now();
        GridDiagram d = load_grid_file(fixture("trefoil_rh_5.grid"));
        expect(tau(d).tau == 1, "tau should be 1");
        BennequinReport b = bennequin_checks(d);
        expect(b.sl == 1 && b.sharp, "sl = 1 = 2 tau - 1 should be sharp");
        ThinShortcut s = thin_shortcut(d);
        ThetaVerdict v = theta(d, ThetaSign::plus);
        expect(s == ThinShortcut::nonzero, "thin shortcut should report nonzero");
        expect(!v.vanishes, "plus class should not vanish");
        expect((s == ThinShortcut::zero) == v.vanishes, "shortcut and theta must agree");
        expect(seconds_since(t0) < 1.0, "runtime must stay under 1 s");
    });

    // 3. concordance pipeline on same-classical pairs with opposite class fates
    criterion(3, "obstruction pipeline", [] {
        GridDiagram t25 = load_grid_file(fixture("t25_7.grid"));
        GridDiagram t34 = load_grid_file(fixture("t34_7.grid"));
        GridDiagram fourone = load_grid_file(fixture("fourone_6.grid"));
        GridDiagram trefoil = load_grid_file(fixture("trefoil_rh_5.grid"));

        // K1 carries a surviving class at (2, -1): a negative stabilization
        // of the sharp (2,5) torus representative
        GridDiagram k1 = stabilize(t25, StabilizationKind::negative);
        expect(k1 == load_grid_file(fixture("k1_thm41_8.grid")),
               "K1 fixture should match its construction");
        auto ci1 = classical_invariants(k1);
        expect(ci1.tb == 2 && ci1.r == -1, "K1 should have (tb, r) = (2, -1)");

        // K2 carries a dying class at the same (2, -1): a positive
        // stabilization hidden among negative ones
        GridDiagram k2 = stabilize(
            stabilize(stabilize(t34, StabilizationKind::negative),
                      StabilizationKind::negative),
            StabilizationKind::positive);
        expect(k2 == load_grid_file(fixture("k2_thm41_10.grid")),
               "K2 fixture should match its construction");
        auto ci2 = classical_invariants(k2);
        expect(ci2.tb == 2 && ci2.r == -1, "K2 should have (tb, r) = (2, -1)");

        ObstructionVerdict v = obstruct(k1, k2);
        expect(v.kind == ObstructionKind::obstructed_theta,
               "(2,-1) pair should be obstructed through the class");

        // K2' built by connected_sum: the figure-eight factor kills the class
        GridDiagram sum = connected_sum(fourone, trefoil);
        expect(sum == load_grid_file(fixture("sum_fourone_trefoil_10.grid")),
               "connected-sum fixture should match its construction");
        auto cis = classical_invariants(sum);
        expect(cis.tb == -1 && cis.r == 0, "sum should have (tb, r) = (-1, 0)");
        ObstructionVerdict v2 = obstruct(unknot_grid(), sum);
        expect(v2.kind == ObstructionKind::obstructed_theta,
               "unknot vs sum should be obstructed through the class");
        expect(obstruct(sum, unknot_grid()).kind == ObstructionKind::not_obstructed,
               "the reversed direction must not be obstructed");
    });

    // 4. property suites
    criterion(4, "property suites", [] {
        std::mt19937 rng(2718);
        // d^2 = 0 on 200 random grids up to size 6
        std::vector<GridState> dx, dy;
        for (int trial = 0; trial < 200; ++trial) {
            GridDiagram d = oracles::random_grid(rng, 4 + trial % 3);
            GridComplex gc(d);
            std::map<std::uint64_t, int> parity;
            for_each_state(d.n, [&](const GridState& s, std::uint64_t) {
                gc.boundary_blocked(s, dx);
                parity.clear();
                for (const auto& y : dx) {
                    gc.boundary_blocked(y, dy);
                    for (const auto& z : dy) parity[z.packed()] ^= 1;
                }
                for (auto& [key, p] : parity)
                    if (p) expect(false, "d^2 != 0");
            });
        }

        // symmetry and Euler characteristic on every shipped fixture
        for (const char* name : {"unknot2.grid", "trefoil_rh_5.grid", "fourone_6.grid",
                                 "t25_7.grid", "t34_7.grid", "sixone_8.grid"}) {
            GridDiagram d = load_grid_file(fixture(name));
            HomologyTable t = homology(d);
            int shift = t.n - 1;
            for (const auto& [key, r] : t.ranks)
                expect(t.rank(key.first - key.second - shift, -key.second - 2 * shift) == r,
                       std::string("blocked symmetry fails on ") + name);
            HomologyTable hat = collapse_smearing(t);
            for (const auto& [key, r] : hat.ranks)
                expect(hat.rank(key.first - key.second, -key.second) == r,
                       std::string("collapsed symmetry fails on ") + name);
            auto expected = oracles::laurent_mul(oracles::alexander_via_fox(d),
                                                 smearing_factor(d.n));
            expect(euler_characteristic(t) == expected,
                   std::string("Euler characteristic vs Alexander fails on ") + name);
        }

        // canonical grading identity on 200 random grids
        for (int trial = 0; trial < 200; ++trial) {
            GridDiagram d = oracles::random_grid(rng, 4 + trial % 3);
            auto ci = classical_invariants(d);
            Bigrading g = bigrading(d, canonical_state(d, ThetaSign::plus));
            expect(g.maslov == ci.tb - ci.r + 1 && g.alex2 == ci.tb - ci.r + 1,
                   "grading identity M(x+) = 2A(x+) = tb - r + 1 fails");
        }

        // vanishing is invariant under negative stabilization and commutation
        for (int trial = 0; trial < 50; ++trial) {
            GridDiagram d = oracles::random_grid(rng, 4 + trial % 2);
            bool v = theta(d).vanishes;
            if (theta(stabilize(d, StabilizationKind::negative)).vanishes != v)
                expect(false, "negative stabilization changed vanishing");
            for (int c = 0; c + 1 < d.n; ++c)
                if (auto moved = commute_columns(d, c))
                    if (theta(*moved).vanishes != v)
                        expect(false, "commutation changed vanishing");
        }

        // connected-sum rule on all fixture pairs within capacity
        struct Named { const char* file; };
        std::vector<const char*> files{"unknot2.grid", "trefoil_rh_5.grid", "fourone_6.grid",
                                       "t25_7.grid", "t34_7.grid", "sixone_8.grid"};
        for (const char* f1 : files) {
            for (const char* f2 : files) {
                GridDiagram a = load_grid_file(fixture(f1));
                GridDiagram b = load_grid_file(fixture(f2));
                if (a.n + b.n - 1 > 9) continue;
                bool va = theta(a).vanishes, vb = theta(b).vanishes;
                bool vs = theta(connected_sum(a, b)).vanishes;
                expect(vs == (va || vb),
                       std::string("connected-sum vanishing rule fails on ") + f1 + " # " + f2);
            }
        }
    });

    // 5. domain calculus on the doubled-surface and toy diagrams
    criterion(5, "domain calculus", [] {
        using namespace heegaard;
        auto t0 = Clock::now();
        for (int g : {1, 2}) {
            for (int n : {1, 2}) {
                std::string name = std::string("heegaard/pbeta_g") + std::to_string(g) + "_n" +
                                   std::to_string(n) + ".json";
                CurveDiagram d = load_curve_diagram(fixture(name.c_str()));
                const DomainVector& pb = d.named_domains.at("P_beta");
                expect(euler_measure(d, pb) == Rational(-6 * g - 4 * n),
                       "Euler measure should be -6g - 4n");
                for (const char* tuple : {"bottom_u", "bottom_v"})
                    expect(chern_pairing(d, pb, d.named_tuples.at(tuple)) == 2 - 2 * g,
                           "pairing should be 2 - 2g on bottom tuples");
                auto bottom = d.named_tuples.at("bottom_u");
                for (std::size_t slot = 0; slot < bottom.size(); ++slot) {
                    const std::string& pname = d.points[bottom[slot]];
                    std::vector<std::string> alts;
                    if (pname == "u") alts = {"up", "vp"};
                    else if (pname.rfind("xb", 0) == 0) alts = {"xbp" + pname.substr(2)};
                    for (const auto& alt : alts) {
                        auto tuple = bottom;
                        tuple[slot] = d.point_index(alt);
                        expect(chern_pairing(d, pb, tuple) > 2 - 2 * g,
                               "pairing should exceed 2 - 2g off the bottom form");
                    }
                }
            }
        }
        expect(winding_bound(2, 3) == 43, "winding_bound(2, 3) should be 43");

        const std::set<Family> all{Family::alpha, Family::beta, Family::gamma};
        for (const char* name :
             {"heegaard/torus_s3.json", "heegaard/s1s2.json", "heegaard/triple_toy.json",
              "heegaard/postwinding.json"}) {
            CurveDiagram d = load_curve_diagram(fixture(name));
            auto basis = periodic_domain_basis(d, all);
            bool fm = !is_weakly_admissible(d, basis).admissible;
            bool brute = oracles::one_signed_combination_brute(basis, 5);
            expect(fm == brute,
                   std::string("admissibility vs brute force disagrees on ") + name);
        }
        CurveDiagram post = load_curve_diagram(fixture("heegaard/postwinding.json"));
        std::vector<DomainVector> wound{post.named_domains.at("Q1_wound"),
                                        post.named_domains.at("Q2_wound")};
        expect(is_weakly_admissible(post, wound).admissible,
               "post-winding configuration should be weakly admissible");
        expect(seconds_since(t0) < 5.0, "domain criteria must run in seconds");
    });

    std::printf("%s: %d failure%s\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures, failures == 1 ? "" : "s");
    return failures;
}
