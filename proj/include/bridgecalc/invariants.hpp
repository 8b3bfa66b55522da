#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bridgecalc/half.hpp"
#include "bridgecalc/state.hpp"

namespace bridgecalc {

using VertexSet = std::set<std::string>;

// (-m * chi + w) / 2 for a closed surface with marked punctures.
Half surface_x_m(const Surface& s, int m);
Half surface_x_m(int chi, int weight, int m);

struct InvariantBundle {
    Half netchi;
    Half netg;
    Half netw;
    Half netx;
    std::map<int, Half> netx_m;

    bool operator==(const InvariantBundle&) const = default;
};

// Validates first; throws InvalidState. Asserts 2 netx_m = m netchi + netw.
InvariantBundle net_invariants(const PairState& s, const std::vector<int>& ms = {1, 2, 3});
// Same sums without validation or the identity assertion.
InvariantBundle raw_invariants(const PairState& s, const std::vector<int>& ms = {1, 2, 3});

// The state with every puncture weight replaced by 1.
PairState unweighted(const PairState& s);

// Vertex spheres whose incident arcs all have weight 1.
VertexSet unit_vertices(const PairState& s);
// Every subset of unit_vertices, up to `limit` subsets (smallest first by enumeration order).
std::vector<VertexSet> admissible_vertex_sets(const PairState& s, std::size_t limit = 256);

// Defect of one VPC. Weights are read from the VPC's own arcs. U must contain only
// vertex spheres of this VPC incident to weight-1 arcs (PreconditionError otherwise);
// members of U outside the VPC are ignored.
Half delta_m(const PairState& s, const std::string& vpcId, int m, const VertexSet& U = {});

// 2 netx_m - x_m(boundary) - x_m(vertices not in U) - x(U) - sum of delta_m. Zero on well-formed states.
Half counting_identity_residual(const PairState& s, int m, const VertexSet& U = {});

int max_weight(const PairState& s);

struct LowerBound {
    Half bound;
    Half netw;
    bool satisfied = false;
};

// -mu (2 netg - 2) - mu chi(dM)/2 - w(dM)/2, where dM is the punctured boundary:
// manifold-boundary surfaces together with vertex spheres.
LowerBound lower_bound_check(const PairState& s);

// For a VPC with negative defect at some m >= max weight, the positive boundary must be a sphere
// and all of the VPC's vertex spheres must lie in U. Returns the offending VPC ids.
std::vector<std::string> negative_delta_lint(const PairState& s, int m, const VertexSet& U);

// Closed states of net genus 0 or 1: spheres and tori only, the dual graph a tree,
// and no sphere edge separating two torus edges. PreconditionError otherwise.
bool lens_shape_check(const PairState& s);

}  // namespace bridgecalc
