#pragma once
// The canonical Legendrian classes of a grid diagram and their vanishing.
//
// The plus state occupies the upper-right corner of every X cell, the minus
// state the lower-left corner. Both are cycles of the fully blocked complex;
// the plus class carries bigrading M = 2A = tb - r + 1. Vanishing is decided
// inside the single bigrading block of the class: the class dies iff the
// state lies in the image of the incoming differential, and the smearing
// factor relating the blocked theory to hat-HFK cannot change that.

#include "gridknot/complex.hpp"
#include "gridknot/homology.hpp"

namespace gridknot {

// Vanishing touches only two bigrading blocks, which stays affordable one
// size above the full-homology cap.
inline constexpr int kDefaultThetaCap = 10;

enum class ThetaSign { plus, minus };

// Raised when a structural self-check fails (e.g. the canonical state is not
// a cycle); signals a convention bug in the build, not a mathematical result.
struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThetaVerdict {
    GridState state;
    Bigrading grading;
    bool is_cycle = false;
    bool vanishes = false;
};

GridState canonical_state(const GridDiagram& d, ThetaSign sign);

ThetaVerdict theta(const GridDiagram& d, ThetaSign sign = ThetaSign::plus,
                   int cap = kDefaultThetaCap);

}  // namespace gridknot
