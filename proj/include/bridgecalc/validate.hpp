#pragma once

#include "bridgecalc/errors.hpp"
#include "bridgecalc/state.hpp"

namespace bridgecalc {

// Structural well-formedness. Always returns a report; never throws.
ValidationReport validate_state(const PairState& s);

// Throws InvalidState carrying the report when the state is not well formed.
void require_valid(const PairState& s);

}  // namespace bridgecalc
