#include "gridknot/invariants_report.hpp"

#include <json.hpp>

namespace gridknot {

LegendrianReport legendrian_report(const GridDiagram& d, int theta_cap, int tau_cap,
                                   int homology_cap) {
    LegendrianReport rep;
    rep.classical = classical_invariants(d);
    if (d.n <= theta_cap) rep.theta_plus_vanishes = theta(d, ThetaSign::plus, theta_cap).vanishes;
    if (d.n <= tau_cap) rep.tau_value = tau(d, tau_cap).tau;
    if (d.n <= homology_cap) rep.thin = is_thin(homology(d, homology_cap));
    return rep;
}

BennequinReport bennequin_checks(const GridDiagram& d, int tau_cap) {
    BennequinReport b;
    b.sl = classical_invariants(d).sl;
    b.tau_value = tau(d, tau_cap).tau;
    b.slack = (2 * b.tau_value - 1) - b.sl;
    b.sharp = b.slack == 0;
    if (b.slack < 0)
        throw ConventionError("bennequin_checks: sl exceeds 2 tau - 1");
    return b;
}

ThinShortcut thin_shortcut(const GridDiagram& d, int tau_cap, int homology_cap) {
    if (!is_thin(homology(d, homology_cap))) return ThinShortcut::not_applicable;
    BennequinReport b = bennequin_checks(d, tau_cap);
    return b.sharp ? ThinShortcut::nonzero : ThinShortcut::zero;
}

const char* to_string(ThinShortcut s) {
    switch (s) {
        case ThinShortcut::nonzero: return "nonzero";
        case ThinShortcut::zero: return "zero";
        case ThinShortcut::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::string to_json(const LegendrianReport& rep) {
    nlohmann::json j;
    j["tb"] = rep.classical.tb;
    j["r"] = rep.classical.r;
    j["sl"] = rep.classical.sl;
    j["theta_plus_vanishes"] =
        rep.theta_plus_vanishes ? nlohmann::json(*rep.theta_plus_vanishes) : nlohmann::json();
    j["tau"] = rep.tau_value ? nlohmann::json(*rep.tau_value) : nlohmann::json();
    j["thin"] = rep.thin ? nlohmann::json(*rep.thin) : nlohmann::json();
    return j.dump();
}

}  // namespace gridknot
