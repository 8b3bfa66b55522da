#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bridgecalc/half.hpp"
#include "bridgecalc/state.hpp"

namespace bridgecalc {

enum class SumKind { distant, connected, cut_edge, trivalent };

std::string sum_kind_name(SumKind k);
SumKind sum_kind_from_name(const std::string& name);

struct SumSpec {
    SumKind kind = SumKind::connected;
    int u = 1;  // weight of the joined edges for a connected sum
    // VPCs that receive the summing sphere; empty means the first suitable one.
    std::string vpcA, vpcB;
    // Connected sums: the arc cut in each factor, or a core loop when loopA/loopB is set.
    std::optional<Arc> arcA, arcB;
    bool loopA = false, loopB = false;
    // Cut-edge sums: once-punctured boundary spheres; trivalent sums: vertex spheres.
    std::string pointA, pointB;
    // Reverse every normal of the second factor before summing.
    bool flipB = false;
    std::string sphereId = "S";
};

// Factor ids are prefixed with "a/" and "b/". Throws PreconditionError on a weight mismatch,
// a missing attachment point, or when the summing sphere cannot be oriented.
PairState compose(const PairState& a, const PairState& b, const SumSpec& spec);

// Splits along a separating thin sphere with at most three punctures and caps both copies.
// The first factor is the one the sphere points out of.
std::pair<PairState, PairState> decompose(const PairState& s, const std::string& sphereId);

// b_a + b_b - u for g in {0, 1}. A factor flagged as a core loop must have b_1 = 0.
Half additivity_bound(Half ba, Half bb, int u, int g, bool aCoreLoop = false, bool bCoreLoop = false);

// netw / 2 of the composite equals the bound.
bool achieves_additivity_bound(const PairState& composite, Half bound);

struct CutEdgeResult {
    PairState state;
    int count = 0;
};

// Deletes every edge crossing a once-punctured thin sphere, dissolving vertices left with degree 2.
CutEdgeResult cut_edge_reduce(const PairState& s);

}  // namespace bridgecalc
