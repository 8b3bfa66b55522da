#pragma once

#include <string>
#include <vector>

#include "bridgecalc/state.hpp"

namespace bridgecalc {

// Small named states used as seeds by the generator and as fixtures.

// One thick sphere with 2b punctures; bridge arcs pair consecutive punctures on both sides.
// weights[i] is the weight of the i-th bridge (defaults to 1).
PairState bridge_sphere(int bridges, const std::vector<int>& weights = {});

// The 1-bridge unknot.
PairState unknot_1bridge(int weight = 1);

// A thick unpunctured torus; one side a solid torus with a core loop.
PairState torus_with_core_loop();

// The unknot in 2-bridge position: bridge arcs (1,3),(2,4) above and (1,2),(3,4) below.
PairState two_bridge_unknot();

// A thick unpunctured surface of genus g; side B holds one core loop.
PairState handlebody_with_core_loop(int genus);

// A thick unpunctured surface of genus g with empty tangle on both sides.
PairState empty_surface(int genus);

// Two thick unpunctured surfaces of genus t+1 separated by a thin twice-punctured sphere;
// the knot runs as a ghost arc on each side of the sphere.
PairState twin_handlebody_composite(int t);

// A thick sphere with one puncture per weight; both sides are cones to vertex spheres.
PairState theta_graph(const std::vector<int>& weights);

// The 1-bridge knot in a thick torus: two punctures, a bridge arc on each side.
PairState torus_1bridge(int weight = 1);

// A chain of k thick tori with k-1 thin tori between them. `punctures` vertical strands run
// through the whole stack and end in bridge arcs at the two ends (punctures must be even).
PairState torus_stack(int k, int punctures = 0, bool coreLoop = false);

}  // namespace bridgecalc
