#pragma once

#include <set>
#include <string>
#include <vector>

#include "bridgecalc/state.hpp"

namespace bridgecalc {

// A thick or thin surface seen as an edge between its two VPCs, oriented
// from the VPC it points out of to the VPC it points into.
struct DualEdge {
    std::string surface;
    std::string tail;
    std::string head;
};

// Edges for thick and thin surfaces that have exactly two distinct adjacent VPCs.
// When the direction is not one of them the edge is reported tail-first in state order.
std::vector<DualEdge> dual_edges(const PairState& s);

bool dual_digraph_acyclic(const PairState& s);

// Connected components of the VPC graph with the given surfaces' edges removed.
std::vector<std::set<std::string>> vpc_components(const PairState& s,
                                                  const std::set<std::string>& removed = {});

}  // namespace bridgecalc
