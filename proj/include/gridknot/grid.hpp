#pragma once
// Grid diagrams: an n x n grid with one O and one X per row and column,
// presenting an oriented knot together with a Legendrian front.
//
// Coordinates: columns 0..n-1 left to right, rows 0..n-1 bottom to top.
// o[c] / x[c] is the row of the O / X marking in column c. Markings live in
// cells; lattice points (vertices) carry grid states. Orientation convention:
// vertical segments run X -> O in each column, horizontal segments run
// O -> X in each row, and vertical strands cross over horizontal ones.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gridknot {

struct GridDiagram {
    int n = 0;
    std::vector<int> o;  // o[c] = row of O in column c
    std::vector<int> x;  // x[c] = row of X in column c

    bool operator==(const GridDiagram& other) const = default;
};

enum class GridError {
    bad_size,         // n < 2 or array lengths != n
    o_not_permutation,
    x_not_permutation,
    shared_cell,      // o[c] == x[c] for some column
    multi_component,  // o . x^{-1} is not a single n-cycle
};

struct ValidationReport {
    std::vector<GridError> errors;
    bool ok() const { return errors.empty(); }
};

const char* to_string(GridError e);

ValidationReport validate(const GridDiagram& d);
bool is_valid(const GridDiagram& d);

// Throws std::invalid_argument listing the failed invariants.
void require_valid(const GridDiagram& d);

// Inverse permutation (callers guarantee perm is a bijection).
std::vector<int> inverse_perm(const std::vector<int>& perm);

// --- elementary diagrams -------------------------------------------------

// The 2x2 grid of the tb-maximal Legendrian unknot.
GridDiagram unknot_grid();

// Positive torus knot T(p, q) on a (p+q)-sized grid, as the standard
// staircase (x on the diagonal, o shifted by p rows). For (2,3) this is the
// tb-maximizing right-handed trefoil.
GridDiagram torus_knot_grid(int p, int q);

// --- symmetries -----------------------------------------------------------

// Mirror image: reflect rows (o[c] -> n-1-o[c]). Reflection with the
// over/under convention preserved is the honest mirror; it is an involution.
GridDiagram mirror(const GridDiagram& d);

// Orientation reversal: swap the roles of O and X (same curve, reversed).
GridDiagram reverse(const GridDiagram& d);

// --- moves ----------------------------------------------------------------

// Interchange columns c and c+1. Legal only when the two vertical spans are
// disjoint or strictly nested (a planar isotopy of the front); returns
// nullopt otherwise. Row version acts on rows r and r+1.
std::optional<GridDiagram> commute_columns(const GridDiagram& d, int c);
std::optional<GridDiagram> commute_rows(const GridDiagram& d, int r);

// Cyclic permutations of the torus diagram. These preserve the knot but may
// change the Legendrian class; callers that care recompute (tb, r).
GridDiagram rotate_columns_left(const GridDiagram& d);
GridDiagram rotate_columns_right(const GridDiagram& d);
GridDiagram rotate_rows_up(const GridDiagram& d);    // row k -> k+1 (mod n)
GridDiagram rotate_rows_down(const GridDiagram& d);  // row k -> k-1 (mod n)

// --- text / JSON formats ----------------------------------------------------
//
// Text format (bit-exact): line 1 "n", line 2 the o permutation as
// space-separated 0-indexed integers, line 3 the x permutation. Lines whose
// first non-blank character is '#' are ignored.
// JSON mirror: { "n": ..., "o": [...], "x": [...] }.

std::string to_text(const GridDiagram& d);
std::string to_json(const GridDiagram& d);

// Parse errors throw std::runtime_error with a descriptive message; the
// parsed diagram is validated before being returned unless `validated` is
// false (used to report which invariants fail).
GridDiagram parse_grid_text(const std::string& text, bool validated = true);
GridDiagram parse_grid_json(const std::string& text, bool validated = true);

// Reads a file, dispatching on extension (".json" vs anything else).
GridDiagram load_grid_file(const std::string& path, bool validated = true);

}  // namespace gridknot
