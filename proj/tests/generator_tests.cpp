#include <doctest.h>

#include <algorithm>

#include "bridgecalc/catalog.hpp"
#include "bridgecalc/generator.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/json_io.hpp"
#include "bridgecalc/validate.hpp"

using namespace bridgecalc;

namespace {

bool contains(const std::vector<PairState>& states, const PairState& s) {
    std::string t = state_text(s);
    return std::any_of(states.begin(), states.end(), [&](const PairState& x) { return state_text(x) == t; });
}

}  // namespace

TEST_CASE("every generated state is valid with zero counting residual") {
    for (std::uint64_t seed : {0u, 1u, 2u}) {
        for (const auto& s : generate_states(seed, 6, 40)) {
            CHECK(validate_state(s).ok());
            CHECK(s.flags.everySphereSeparates);
            for (int m : {1, 2, 3}) CHECK(counting_identity_residual(s, m) == Half(0));
        }
    }
}

TEST_CASE("the catalog comes first and holds the small named states") {
    CHECK(contains(generate_states(0, 3), unknot_1bridge()));
    CHECK(contains(catalog_states(4), torus_with_core_loop()));
    auto catalog = catalog_states(8);
    auto all = generate_states(5, 8, 10);
    REQUIRE(all.size() >= catalog.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) CHECK(state_text(all[i]) == state_text(catalog[i]));
}

TEST_CASE("generation is deterministic per seed") {
    auto text = [](std::uint64_t seed) {
        std::string out;
        for (const auto& s : generate_states(seed, 7, 30)) out += state_text(s) + "\n";
        return out;
    };
    CHECK(text(3) == text(3));
    CHECK(text(3) != text(4));
}

TEST_CASE("size bound counts surfaces and VPCs") {
    for (const auto& s : generate_states(9, 5, 50)) CHECK(s.surfaces.size() + s.vpcs.size() <= 5);
}

TEST_CASE("random thinning scripts without noise run to completion") {
    Rng rng(11);
    for (const auto& s : generate_states(1, 8, 20)) {
        auto script = random_thinning_script(s, rng, 10, false);
        auto r = thin_driver(s, script);
        CHECK_MESSAGE(r.completed, r.error);
    }
}
