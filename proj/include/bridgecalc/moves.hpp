#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bridgecalc/state.hpp"

namespace bridgecalc {

// One side ("a") of a separating disc. The other side gets everything else.
struct SideSplit {
    int genus = 0;
    std::vector<std::string> punctures;  // punctures of the thick surface on side a
    std::vector<std::string> negatives;  // negative boundaries of the disc's VPC that go with side a
    int coreLoops = 0;                   // core loops of the disc's VPC that go with side a
    bool operator==(const SideSplit&) const = default;
};

struct DiscSpec {
    std::string vpc;             // the adjacent VPC containing the disc
    int p = 0;                   // 0 compressing, 1 cut
    int scarWeight = 1;          // weight of the edge the cut disc meets
    std::optional<Arc> arc;      // that edge's arc in `vpc`, when p = 1
    bool separating = false;
    SideSplit split;             // when separating
    // For a non-separating disc when the other disc separates: the side ("a" or "b")
    // of the other disc's split that contains this disc's boundary.
    std::string within;
    // Replacement tangles for new VPCs, by new VPC id.
    std::map<std::string, Tangle> outcome;
    bool operator==(const DiscSpec&) const = default;
};

// For two non-separating discs whose boundaries together separate the thick surface:
// side a of the resulting split.
struct JointSplit {
    int genus = 0;
    std::vector<std::string> punctures;
    bool operator==(const JointSplit&) const = default;
};

struct Untelescoping {
    std::string thick;
    DiscSpec plus;
    DiscSpec minus;
    std::optional<JointSplit> joint;
    bool operator==(const Untelescoping&) const = default;
};

// Removes a thick surface and a thin surface cobounding a product or punctured product.
// Throws MoveRejected when the pair does not qualify.
PairState consolidate(const PairState& s, const std::string& thickId, const std::string& thinId);

// Replaces a thick surface by two thick surfaces and a thin surface between them.
// Throws MoveRejected on an inconsistent spec and IdentityFailure if an arithmetic check fails.
PairState untelescope(const PairState& s, const Untelescoping& u);

struct ElementaryResult {
    PairState state;
    int consolidations = 0;
};

// Untelescoping followed by every consolidation of a new product between a new thick
// and a new thin surface.
ElementaryResult elementary_thinning(const PairState& s, const Untelescoping& u);

// Merges the thick surfaces of two VPCs across their shared thin boundaries.
PairState amalgamate(const PairState& s, const std::string& vpc1, const std::string& vpc2);

// Pairs (thick, thin) that consolidate, smallest thick id first, then smallest thin id.
std::vector<std::pair<std::string, std::string>> consolidation_candidates(const PairState& s);

}  // namespace bridgecalc
