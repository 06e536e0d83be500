#pragma once
// Abstract Heegaard (multi-)diagram data: regions with exact Euler measures
// and basepoint flags, named curves grouped into the alpha/beta/gamma
// families as signed edge cycles, and local corner counts at intersection
// points. Diagrams are pure incidence data; no embedding is stored.
//
// JSON schema (see fixtures/heegaard/ for instances):
// {
//   "name": "...",
//   "euler_total": "p/q",                 // chi of the closed surface
//   "points": ["p", ...],
//   "curves": [{"name": "alpha1", "family": "alpha", "edges": ["e", ...]}],
//   "regions": [{
//       "name": "R", "euler": "p/q",
//       "basepoints": ["z", "w1+"],        // optional
//       "boundary": [{"edge": "e", "sign": 1}, ...]   // optional
//   }],
//   "corners": [{"region": "R", "point": "p", "count": 2}],
//   "domains": {"P_beta": {"R": 2, ...}},  // optional named domains
//   "tuples": {"bottom": ["p", ...]}       // optional named generator tuples
// }

#include <map>
#include <string>
#include <vector>

#include "gridknot/domain/rational.hpp"

namespace gridknot::heegaard {

enum class Family { alpha, beta, gamma };

Family family_from_string(const std::string& s);
const char* to_string(Family f);

struct Region {
    std::string name;
    Rational euler;
    std::vector<std::string> basepoints;
    std::vector<std::pair<int, int>> boundary;  // (edge index, sign)
};

struct Curve {
    std::string name;
    Family family;
    std::vector<int> edges;  // indices into CurveDiagram::edges
};

// Integer multiplicity per region.
struct DomainVector {
    std::vector<long long> mult;
};

struct CurveDiagram {
    std::string name;
    Rational euler_total;
    std::vector<std::string> points;
    std::vector<std::string> edges;
    std::vector<Curve> curves;
    std::vector<Region> regions;
    // corners[r][p] = local corner count of point p at region r (0..4)
    std::vector<std::vector<int>> corners;
    std::map<std::string, DomainVector> named_domains;
    std::map<std::string, std::vector<int>> named_tuples;  // point indices

    int region_index(const std::string& name) const;
    int point_index(const std::string& name) const;
    int curve_index(const std::string& name) const;
};

// Parses and validates. Structural invariants enforced:
//  - every intersection point carries exactly four local corners in total,
//  - region Euler measures sum to euler_total,
//  - every edge belongs to exactly one curve and its signed coefficients over
//    all region boundaries cancel (closed-surface consistency).
CurveDiagram parse_curve_diagram(const std::string& json_text);
CurveDiagram load_curve_diagram(const std::string& path);

// Serialize back to the schema above (round-trips through the parser).
std::string to_json(const CurveDiagram& d);

}  // namespace gridknot::heegaard
