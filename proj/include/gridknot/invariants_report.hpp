#pragma once
// Combined per-knot report: classical invariants, the plus-class vanishing,
// tau, thinness, and the slice-Bennequin check. Heavy fields are computed
// only within their capacity caps and are omitted (JSON null) beyond them.

#include <optional>
#include <string>

#include "gridknot/grid.hpp"
#include "gridknot/homology.hpp"
#include "gridknot/legendrian.hpp"
#include "gridknot/tau.hpp"
#include "gridknot/theta.hpp"

namespace gridknot {

struct LegendrianReport {
    ClassicalInvariants classical;
    std::optional<bool> theta_plus_vanishes;
    std::optional<int> tau_value;
    std::optional<bool> thin;
};

struct BennequinReport {
    int sl = 0;
    int tau_value = 0;
    int slack = 0;      // (2 tau - 1) - sl, nonnegative
    bool sharp = false; // slack == 0
};

// {nonzero, zero} from the thin-knot criterion, or not_applicable.
enum class ThinShortcut { nonzero, zero, not_applicable };

LegendrianReport legendrian_report(const GridDiagram& d,
                                   int theta_cap = kDefaultThetaCap,
                                   int tau_cap = kDefaultTauCap,
                                   int homology_cap = kDefaultHomologyCap);

// Verifies sl <= 2 tau - 1 and reports the slack; a violation would signal a
// convention bug and throws.
BennequinReport bennequin_checks(const GridDiagram& d, int tau_cap = kDefaultTauCap);

// For thin knots the plus class is nonzero iff the Bennequin bound is sharp.
ThinShortcut thin_shortcut(const GridDiagram& d,
                           int tau_cap = kDefaultTauCap,
                           int homology_cap = kDefaultHomologyCap);

const char* to_string(ThinShortcut s);

// JSON object {"tb","r","sl","theta_plus_vanishes","tau","thin"}.
std::string to_json(const LegendrianReport& rep);

}  // namespace gridknot
