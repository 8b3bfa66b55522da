#pragma once

#include <string>

#include "bridgecalc/errors.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/validate.hpp"

namespace bridgecalc::detail {

inline void require_move_valid(const PairState& out, const std::string& move) {
    auto report = validate_state(out);
    if (!report.ok()) throw MoveRejected(move + " produced an invalid state: " + report.summary());
}

inline void require_same_invariants(const PairState& before, const PairState& after, const std::string& move) {
    if (raw_invariants(before) != raw_invariants(after))
        throw IdentityFailure(move + " changed the net invariants");
}

inline void flip_direction(PairState& s, const std::string& sid) {
    Surface& surf = *s.find_surface(sid);
    surf.direction = s.other_side(sid, surf.direction);
}

}  // namespace bridgecalc::detail
