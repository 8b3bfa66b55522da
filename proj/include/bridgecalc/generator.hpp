#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bridgecalc/crush.hpp"
#include "bridgecalc/driver.hpp"
#include "bridgecalc/state.hpp"

namespace bridgecalc {

using Rng = std::mt19937_64;

// Uniform in [0, n); the plain modulus keeps streams identical across standard libraries.
inline std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Thick surface of the given genus with one bridge per weight, bridges pairing punctures
// (2i-1, 2i) on both sides, and `coreLoops` core loops on side B.
PairState bridge_surface(int genus, const std::vector<int>& weights, int coreLoops = 0);

// Inserts a product layer next to a thick surface: H, thin copy, thick copy, on the side H
// points away from. Creates a consolidation and an amalgamation opportunity.
PairState thicken(const PairState& s, const std::string& thickId);

// Lens-shaped states of net genus 0 or 1 with at most maxSize surfaces plus VPCs, in a fixed order.
std::vector<PairState> catalog_states(int maxSize);

// catalog_states(maxSize) followed by `samples` random states of size at most maxSize.
// Every state passes validation and has everySphereSeparates set.
std::vector<PairState> generate_states(std::uint64_t seed, int maxSize, int samples = 200);

// Untelescopings worth trying on `s`, in a fixed order, at most `limit`. Not all of them apply.
std::vector<Untelescoping> untelescoping_candidates(const PairState& s, std::size_t limit = 64);

// Thinning and amalgamation moves that apply to `s`.
std::vector<MoveOp> applicable_moves(const PairState& s, std::size_t limit = 64);

// A sequence of applicable thinning moves of length at most maxMoves, with occasional
// broken moves mixed in when `noise` is set.
MoveScript random_thinning_script(const PairState& s, Rng& rng, int maxMoves, bool noise);

// Crush specs built from weight-1 bridge arcs and pendant thin spheres. Not all of them apply.
std::vector<CrushSpec> crush_candidates(const PairState& s);

}  // namespace bridgecalc
