#pragma once

#include <string>
#include <vector>

#include "bridgecalc/half.hpp"
#include "bridgecalc/state.hpp"

namespace bridgecalc {

struct CrushSpec {
    std::string vpc;
    // Punctures of the VPC's positive boundary inside the two discs, and the ones among them in the handle region.
    std::vector<std::string> d1, d2;
    std::vector<std::string> pi1, pi2;
    // Thin spheres of the VPC (with everything beyond them) lying inside the handle; VPC ids from
    // those subtrees may be listed too.
    std::vector<std::string> inside;
    int omega = 1;
};

struct CrushResult {
    PairState state;
    std::string v1, v2;  // the new vertex spheres
    Half netchiBefore, netchiAfter;
    Half netxBefore, netxAfter;  // with every weight set to 1
    // netx_omega after crushing against (omega - 1) netchi_after / 2 + netx_before
    Half accountingLhs, accountingRhs;
    bool accountingHolds = false;
    bool accountingEqual = false;
};

// Replaces the tangle inside the handle by two vertex spheres joined by a ghost arc of weight omega.
// Throws PreconditionError on a bad spec and IdentityFailure if netchi or unweighted netx grows.
CrushResult crush(const PairState& s, const CrushSpec& spec);

// netw_H / 2 >= netw_L / 2 - omega * g1
bool handle_crush_bound(Half netwHOver2, Half netwLOver2, int omega, int g1);

enum class SatelliteKind { plain, whitehead, cable };

struct SatelliteQuery {
    SatelliteKind kind = SatelliteKind::plain;
    Half b1K;
    int omega = 1;    // plain
    int n = 1;        // whitehead doubling count
    int q = 1;        // cable winding
    bool lensed = false;
    // Caller-asserted: the companion is an unknot, a torus knot or a core loop.
    bool exceptionalCompanion = false;
};

// Lower bound on b_1 of the satellite. Throws PreconditionError for an exceptional companion.
Half satellite_bounds(const SatelliteQuery& q);

Half whitehead_bound(int n, Half b1K);
Half cable_bound(int q, Half b1K);

// max(bgL - delta, 0) with delta = 1 for a lensed solid torus.
Half omega_one_bound(Half bgL, bool lensed);

}  // namespace bridgecalc
