#pragma once

#include <string>

#include <json.hpp>

#include "bridgecalc/crush.hpp"
#include "bridgecalc/driver.hpp"
#include "bridgecalc/half.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/state.hpp"
#include "bridgecalc/words.hpp"

namespace bridgecalc {

using json = nlohmann::ordered_json;

// Integers stay integers; odd halves become "p/2" strings.
json half_to_json(Half h);
Half half_from_json(const json& j);

json state_to_json(const PairState& s);
PairState state_from_json(const json& j);

json bundle_to_json(const InvariantBundle& b);

json tangle_to_json(const Tangle& t);
Tangle tangle_from_json(const json& j);

json disc_to_json(const DiscSpec& d);
DiscSpec disc_from_json(const json& j);

json crush_spec_to_json(const CrushSpec& c);
CrushSpec crush_spec_from_json(const json& j);

json move_to_json(const MoveOp& op);
MoveOp move_from_json(const json& j);
// A bare array of moves, or an object with a "moves" array.
json script_to_json(const MoveScript& script);
MoveScript script_from_json(const json& j);

// {step, op, complexity, bundle}
json trace_record_to_json(const TraceRecord& r);

json word_to_json(const AnnulusWord& w);
AnnulusWord word_from_json(const json& j);

// Throw SchemaError on unreadable files or invalid JSON.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);
PairState read_state_file(const std::string& path);

// Compact canonical text of a state, one line.
std::string state_text(const PairState& s);

}  // namespace bridgecalc
