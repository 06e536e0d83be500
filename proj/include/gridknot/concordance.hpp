#pragma once
// The Lagrangian-concordance obstruction over pairs of Legendrian grids.
//
// A concordance from K1 to K2 forces equal classical invariants, and it
// forces the plus class of K1 to die whenever the plus class of K2 does;
// the engine therefore reports
//   obstructed_classical  when (tb, r) differ,
//   obstructed_theta      when they agree but theta(K1) != 0 and theta(K2) = 0,
//   not_obstructed        otherwise (never a claim that a concordance exists).
// The direction matters: obstructing K2 -> K1 is a separate call.

#include <optional>
#include <string>
#include <vector>

#include "gridknot/invariants_report.hpp"
#include "gridknot/moves.hpp"

namespace gridknot {

enum class ObstructionKind { obstructed_classical, obstructed_theta, not_obstructed };

const char* to_string(ObstructionKind k);

struct ObstructionVerdict {
    ObstructionKind kind = ObstructionKind::not_obstructed;
    ClassicalInvariants k1, k2;
    // present iff the classical invariants matched and theta was evaluated
    std::optional<bool> theta1_vanishes, theta2_vanishes;
};

ObstructionVerdict obstruct(const GridDiagram& k1, const GridDiagram& k2,
                            int theta_cap = kDefaultThetaCap);

struct StabilizedVerdict {
    int stabs1 = 0, stabs2 = 0;  // negative stabilizations applied
    ObstructionVerdict verdict;
};

// Applies obstruct to every pair of at most `depth` negative stabilizations.
// Because the plus class is preserved by negative stabilization, each pair
// with matching classical invariants inherits the base verdict; this is
// checked empirically rather than assumed.
std::vector<StabilizedVerdict> obstruct_stabilized(const GridDiagram& k1,
                                                   const GridDiagram& k2, int depth,
                                                   int theta_cap = kDefaultThetaCap);

struct BatchRow {
    std::string path1, path2;
    std::optional<ObstructionVerdict> verdict;
    std::string error;  // nonempty iff the row failed
};

struct BatchReport {
    std::vector<BatchRow> rows;
    bool all_ok() const;
};

// Evaluates pairs in parallel; rows keep input order. Per-pair failures are
// recorded in the row, never thrown.
BatchReport batch_report(const std::vector<std::pair<std::string, std::string>>& pairs,
                         int theta_cap = kDefaultThetaCap);

std::string to_json(const ObstructionVerdict& v);
std::string to_tsv(const BatchReport& rep);
std::string to_json(const BatchReport& rep);  // schema_version 1

}  // namespace gridknot
