#include <doctest.h>

#include <random>

#include "gridknot/domain/admissibility.hpp"
#include "gridknot/domain/domain_ops.hpp"
#include "gridknot/domain/periodic.hpp"
#include "oracles.hpp"

using namespace gridknot::heegaard;

TEST_SUITE_BEGIN("domain");

namespace {

std::string fixture(const std::string& name) {
    return std::string(GRIDKNOT_FIXTURES) + "/heegaard/" + name;
}

DomainVector zero_domain(const CurveDiagram& d) {
    DomainVector v;
    v.mult.assign(d.regions.size(), 0);
    return v;
}

const std::set<Family> kAll{Family::alpha, Family::beta, Family::gamma};

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) < Rational(0));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("winding bound arithmetic") {
    CHECK(winding_bound(2, 3) == 43);
    CHECK(winding_bound(0, 7) == 1);
    CHECK(winding_bound(5, 0) == 1);
    CHECK_THROWS(winding_bound(-1, 2));
}

TEST_CASE("Euler measure and point multiplicity on the doubled-surface fixtures") {
    for (int g : {1, 2}) {
        for (int n : {1, 2}) {
            std::string name = "pbeta_g" + std::to_string(g) + "_n" + std::to_string(n) +
                               ".json";
            CurveDiagram d = load_curve_diagram(fixture(name));
            const DomainVector& pb = d.named_domains.at("P_beta");

            CHECK(euler_measure(d, pb) == Rational(-6 * g - 4 * n));
            CHECK(euler_measure(d, zero_domain(d)) == Rational(0));
            CHECK(euler_measure(d, d.named_domains.at("whole_surface")) ==
                  Rational(-2 * n - 4 * g));

            // multiplicities at the distinguished points
            CHECK(point_multiplicity(d, pb, d.point_index("y1")) == Rational(2));
            CHECK(point_multiplicity(d, pb, d.point_index("xb1")) == Rational(1));
            CHECK(point_multiplicity(d, pb, d.point_index("u")) == Rational(1));
            CHECK(point_multiplicity(d, pb, d.point_index("v")) == Rational(1));
            CHECK(point_multiplicity(d, pb, d.point_index("up")) == Rational(3, 2));
            CHECK(point_multiplicity(d, pb, d.named_tuples.at("bottom_u")) ==
                  Rational(2 * n + 2 * g + 1));
        }
    }
}

TEST_CASE("chern pairing equals 2 - 2g exactly on bottom tuples, more otherwise") {
    for (int g : {1, 2}) {
        for (int n : {1, 2}) {
            std::string name = "pbeta_g" + std::to_string(g) + "_n" + std::to_string(n) +
                               ".json";
            CurveDiagram d = load_curve_diagram(fixture(name));
            const DomainVector& pb = d.named_domains.at("P_beta");

            for (const char* tuple : {"bottom_u", "bottom_v"})
                CHECK(chern_pairing(d, pb, d.named_tuples.at(tuple)) == 2 - 2 * g);

            // swapping any bottom slot for its alternative strictly increases
            auto bottom = d.named_tuples.at("bottom_u");
            for (std::size_t slot = 0; slot < bottom.size(); ++slot) {
                const std::string& pname = d.points[bottom[slot]];
                std::vector<std::string> alts;
                if (pname == "u") alts = {"up", "vp"};
                else if (pname.rfind("xb", 0) == 0 && pname.rfind("xbp", 0) != 0)
                    alts = {"xbp" + pname.substr(2)};
                for (const auto& alt : alts) {
                    auto tuple = bottom;
                    tuple[slot] = d.point_index(alt);
                    CHECK(chern_pairing(d, pb, tuple) > 2 - 2 * g);
                }
            }

            CHECK(chern_pairing(d, zero_domain(d), bottom) == 0);
            CHECK(maslov_of_periodic(d, pb, bottom) == 2 - 2 * g);
            CHECK_THROWS(chern_pairing(d, d.named_domains.at("whole_surface"), bottom));
        }
    }
}

TEST_CASE("measures are linear in the domain") {
    CurveDiagram d = load_curve_diagram(fixture("pbeta_g1_n1.json"));
    const DomainVector& pb = d.named_domains.at("P_beta");
    const DomainVector& ws = d.named_domains.at("whole_surface");
    std::mt19937 rng(113);
    auto tuple = d.named_tuples.at("bottom_u");
    for (int trial = 0; trial < 20; ++trial) {
        long long a = static_cast<long long>(rng() % 9) - 4;
        long long b = static_cast<long long>(rng() % 9) - 4;
        DomainVector combo = zero_domain(d);
        for (std::size_t r = 0; r < combo.mult.size(); ++r)
            combo.mult[r] = a * pb.mult[r] + b * ws.mult[r];
        CHECK(euler_measure(d, combo) ==
              euler_measure(d, pb) * Rational(a) + euler_measure(d, ws) * Rational(b));
        CHECK(point_multiplicity(d, combo, tuple) ==
              point_multiplicity(d, pb, tuple) * Rational(a) +
                  point_multiplicity(d, ws, tuple) * Rational(b));
    }
}

TEST_CASE("triangle corners weigh a quarter") {
    CurveDiagram d = load_curve_diagram(fixture("triple_toy.json"));
    const DomainVector& tri = d.named_domains.at("one_triangle");
    CHECK(point_multiplicity(d, tri, d.point_index("q1")) == Rational(1, 4));
    CHECK(euler_measure(d, tri) == Rational(1, 4));
}

TEST_CASE("periodic-domain bases match the hand counts") {
    CurveDiagram torus = load_curve_diagram(fixture("torus_s3.json"));
    CHECK(periodic_domain_basis(torus, kAll).empty());

    CurveDiagram s1s2 = load_curve_diagram(fixture("s1s2.json"));
    auto basis = periodic_domain_basis(s1s2, kAll);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].mult == std::vector<long long>{0, 1});  // the annulus away from z

    CurveDiagram triple = load_curve_diagram(fixture("triple_toy.json"));
    // hand count: the lens T1 + T2 - S3 between the beta and gamma curves is
    // the only periodic domain (regions ordered T1, T2, S3, F4)
    const std::vector<long long> lens{1, 1, -1, 0};
    auto all = periodic_domain_basis(triple, kAll);
    REQUIRE(all.size() == 1);
    CHECK(all[0].mult == lens);
    CHECK(periodic_domain_basis(triple, {Family::alpha, Family::beta}).empty());
    CHECK(periodic_domain_basis(triple, {Family::alpha, Family::gamma}).empty());
    auto bg = periodic_domain_basis(triple, {Family::beta, Family::gamma});
    REQUIRE(bg.size() == 1);
    CHECK(bg[0].mult == lens);
}

TEST_CASE("weak admissibility with witnesses, checked against brute force") {
    CurveDiagram torus = load_curve_diagram(fixture("torus_s3.json"));
    CHECK(is_weakly_admissible(torus, {}).admissible);  // vacuous

    CurveDiagram s1s2 = load_curve_diagram(fixture("s1s2.json"));
    auto basis = periodic_domain_basis(s1s2, kAll);
    auto res = is_weakly_admissible(s1s2, basis);
    CHECK_FALSE(res.admissible);
    bool nonneg = true, nonzero = false;
    for (auto v : res.witness.mult) {
        nonneg = nonneg && v >= 0;
        nonzero = nonzero || v != 0;
    }
    CHECK(nonneg);
    CHECK(nonzero);
    CHECK(oracles::one_signed_combination_brute(basis, 5));

    CurveDiagram triple = load_curve_diagram(fixture("triple_toy.json"));
    auto tb = periodic_domain_basis(triple, kAll);
    CHECK(is_weakly_admissible(triple, tb).admissible);
    CHECK_FALSE(oracles::one_signed_combination_brute(tb, 5));

    CurveDiagram post = load_curve_diagram(fixture("postwinding.json"));
    std::vector<DomainVector> wound{post.named_domains.at("Q1_wound"),
                                    post.named_domains.at("Q2_wound")};
    CHECK(is_weakly_admissible(post, wound).admissible);
    CHECK_FALSE(oracles::one_signed_combination_brute(wound, 5));
    auto computed = periodic_domain_basis(post, kAll);
    CHECK(computed.size() == 2);
    CHECK(is_weakly_admissible(post, computed).admissible);
}

TEST_CASE("the wound domains of the post-winding fixture are periodic") {
    CurveDiagram post = load_curve_diagram(fixture("postwinding.json"));
    for (const char* name : {"Q1_wound", "Q2_wound"}) {
        std::vector<Rational> coeffs;
        CHECK(is_periodic_domain(post, post.named_domains.at(name), &coeffs));
    }
}

TEST_CASE("the full surface has index two at every generator") {
    CurveDiagram torus = load_curve_diagram(fixture("torus_s3.json"));
    DomainVector whole;
    whole.mult.assign(torus.regions.size(), 1);
    std::vector<int> generator{torus.point_index("p")};
    Rational value = euler_measure(torus, whole) +
                     Rational(2) * point_multiplicity(torus, whole, generator);
    CHECK(value == Rational(2));
}

TEST_CASE("adding a zero-pairing periodic domain does not move the pairing") {
    CurveDiagram d = load_curve_diagram(fixture("pbeta_g1_n1.json"));
    const DomainVector& pb = d.named_domains.at("P_beta");
    auto bottom = d.named_tuples.at("bottom_u");
    // sigma_bulk and s_bulk are closed (empty boundary, away from z), hence
    // periodic; combine them into a domain with zero pairing at the tuple
    DomainVector a = zero_domain(d), b = zero_domain(d);
    a.mult[d.region_index("sigma_bulk")] = 1;
    b.mult[d.region_index("s_bulk")] = 1;
    long long pa = chern_pairing(d, a, bottom);
    long long pb_val = chern_pairing(d, b, bottom);
    REQUIRE(pb_val != 0);
    DomainVector zero_pairing = zero_domain(d);
    for (std::size_t r = 0; r < zero_pairing.mult.size(); ++r)
        zero_pairing.mult[r] = pb_val * a.mult[r] - pa * b.mult[r];
    CHECK(chern_pairing(d, zero_pairing, bottom) == 0);
    DomainVector shifted = pb;
    for (std::size_t r = 0; r < shifted.mult.size(); ++r)
        shifted.mult[r] += 3 * zero_pairing.mult[r];
    CHECK(chern_pairing(d, shifted, bottom) == chern_pairing(d, pb, bottom));
}

TEST_CASE("curve diagrams round-trip through their JSON schema") {
    for (const char* name : {"pbeta_g1_n1.json", "triple_toy.json", "s1s2.json",
                             "postwinding.json"}) {
        CurveDiagram d = load_curve_diagram(fixture(name));
        CurveDiagram again = parse_curve_diagram(to_json(d));
        CHECK(again.regions.size() == d.regions.size());
        CHECK(again.points == d.points);
        CHECK(again.corners == d.corners);
        CHECK(again.euler_total == d.euler_total);
        for (const auto& [dname, dom] : d.named_domains)
            CHECK(again.named_domains.at(dname).mult == dom.mult);
        CHECK(to_json(again) == to_json(d));
    }
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS(parse_curve_diagram(R"({"euler_total":"1","points":["p"],
        "curves":[],"regions":[{"name":"R","euler":"1"}],
        "corners":[{"region":"R","point":"p","count":3}]})"));
    CHECK_THROWS(parse_curve_diagram(R"({"euler_total":"2","points":[],
        "curves":[],"regions":[{"name":"R","euler":"1"}],"corners":[]})"));
}

TEST_SUITE_END();
