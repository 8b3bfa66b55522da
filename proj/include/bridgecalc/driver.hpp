#pragma once

#include <string>
#include <vector>

#include "bridgecalc/complexity.hpp"
#include "bridgecalc/crush.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/moves.hpp"

namespace bridgecalc {

struct MoveOp {
    std::string op;  // consolidate, untelescope, elementary, amalgamate, crush
    std::string thick, thin;   // consolidate
    Untelescoping untelescoping;  // untelescope, elementary
    std::string vpc1, vpc2;    // amalgamate
    CrushSpec crush;
};

using MoveScript = std::vector<MoveOp>;

struct TraceRecord {
    int step = 0;
    std::string op;
    Complexity complexity;
    InvariantBundle bundle;
};

struct DriverResult {
    PairState state;
    std::vector<TraceRecord> trace;
    bool completed = false;
    // Completed, and no consolidation is left.
    bool locallyThinRelScript = false;
    std::string error;  // why the run stopped early
};

// Throws MoveRejected, PreconditionError or SchemaError (unknown op).
PairState apply_move(const PairState& s, const MoveOp& op);

// Thinning moves only (consolidate, untelescope, elementary). In greedy mode every available
// consolidation is applied first and after each scripted move, smallest thick id first.
// Throws IdentityFailure if the complexity fails to drop.
DriverResult thin_driver(const PairState& s, const MoveScript& script, bool greedy = false);

// Any move, in order, with no monotonicity requirement.
DriverResult apply_script(const PairState& s, const MoveScript& script);

}  // namespace bridgecalc
