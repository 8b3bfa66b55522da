#include <doctest.h>

#include "bridgecalc/catalog.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/json_io.hpp"
#include "bridgecalc/sums.hpp"
#include "bridgecalc/validate.hpp"
#include "oracle.hpp"

using namespace bridgecalc;

namespace {

oracle::Totals totals(const PairState& s) { return oracle::totals(state_to_json(s), {1, 2, 3}); }

SumSpec connected(int u = 1) {
    SumSpec spec;
    spec.kind = SumKind::connected;
    spec.u = u;
    return spec;
}

Surface sphere(std::string id, Role role, std::vector<Puncture> ps, std::string dir = "") {
    Surface s;
    s.id = std::move(id);
    s.role = role;
    s.punctures = std::move(ps);
    s.direction = std::move(dir);
    return s;
}

// One arc between two once-punctured boundary spheres P and Q, crossing a thick sphere.
PairState segment() {
    PairState s;
    s.surfaces = {sphere("H", Role::thick, {{"H.1", 1}}, "A"), sphere("P", Role::boundary, {{"P.1", 1}}),
                  sphere("Q", Role::boundary, {{"Q.1", 1}})};
    Vpc a{"A", "H", {"P"}, {}}, b{"B", "H", {"Q"}, {}};
    a.tangle.vertical = {{"H.1", "P.1"}};
    b.tangle.vertical = {{"H.1", "Q.1"}};
    s.vpcs = {a, b};
    return s;
}

// A vertex of degree 3 whose edges end on three once-punctured boundary spheres.
PairState tripod() {
    PairState s;
    s.surfaces = {sphere("H", Role::thick, {{"H.1", 1}, {"H.2", 1}, {"H.3", 1}}, "A"),
                  sphere("v", Role::vertex, {{"v.1", 1}, {"v.2", 1}, {"v.3", 1}})};
    Vpc a{"A", "H", {"v"}, {}}, b{"B", "H", {}, {}};
    for (int i = 1; i <= 3; ++i) {
        std::string n = std::to_string(i);
        s.surfaces.push_back(sphere("P" + n, Role::boundary, {{"P" + n + ".1", 1}}));
        b.negatives.push_back("P" + n);
        a.tangle.vertical.push_back({"H." + n, "v." + n});
        b.tangle.vertical.push_back({"H." + n, "P" + n + ".1"});
    }
    s.vpcs = {a, b};
    return s;
}

// Two bridge spheres with four punctures each across a thin four-punctured sphere.
PairState four_punctured_sphere() {
    PairState s;
    std::vector<Puncture> h1, f, h2;
    for (int i = 1; i <= 4; ++i) {
        h1.push_back({"H1." + std::to_string(i), 1});
        f.push_back({"S." + std::to_string(i), 1});
        h2.push_back({"H2." + std::to_string(i), 1});
    }
    s.surfaces = {sphere("H1", Role::thick, h1, "C1"), sphere("S", Role::thin, f, "C2"),
                  sphere("H2", Role::thick, h2, "X2")};
    Vpc x1{"X1", "H1", {}, {}}, c1{"C1", "H1", {"S"}, {}}, c2{"C2", "H2", {"S"}, {}}, x2{"X2", "H2", {}, {}};
    x1.tangle.bridge = {{"H1.1", "H1.2"}, {"H1.3", "H1.4"}};
    x2.tangle.bridge = {{"H2.1", "H2.2"}, {"H2.3", "H2.4"}};
    for (int i = 1; i <= 4; ++i) {
        std::string n = std::to_string(i);
        c1.tangle.vertical.push_back({"H1." + n, "S." + n});
        c2.tangle.vertical.push_back({"H2." + n, "S." + n});
    }
    s.vpcs = {x1, c1, c2, x2};
    return s;
}

}  // namespace

TEST_CASE("connected sum of two 1-bridge unknots") {
    auto s = compose(unknot_1bridge(), unknot_1bridge(), connected());
    REQUIRE(validate_state(s).ok());
    auto b = net_invariants(s);
    CHECK(b.netg == Half(0));
    CHECK(b.netw == Half(2));
    CHECK(oracle::of(b.netw) == totals(s).netw);
    CHECK(s.surface("S").punctures.size() == 2);
    CHECK(counting_identity_residual(s, 2) == Half(0));
}

TEST_CASE("distant sum adds net weight exactly") {
    SumSpec spec;
    spec.kind = SumKind::distant;
    auto a = torus_1bridge(), b = bridge_sphere(2);
    auto s = compose(a, b, spec);
    REQUIRE(validate_state(s).ok());
    CHECK(s.surface("S").punctures.empty());
    CHECK(net_invariants(s).netw == net_invariants(a).netw + net_invariants(b).netw);
    CHECK(net_invariants(s).netg == Half(1));
}

TEST_CASE("a genus 0 factor and a genus 1 factor give net genus 1") {
    auto s = compose(unknot_1bridge(), torus_1bridge(), connected());
    CHECK(net_invariants(s).netg == Half(1));
    CHECK(net_invariants(s).netw == Half(2));
}

TEST_CASE("connected sums join edges of equal weight only") {
    auto spec = connected(2);
    CHECK_THROWS_AS(compose(unknot_1bridge(2), unknot_1bridge(1), spec), PreconditionError);
    auto s = compose(unknot_1bridge(2), unknot_1bridge(2), spec);
    CHECK(net_invariants(s).netw == Half(4));
}

TEST_CASE("orientation of the second factor must fit") {
    auto spec = connected();
    spec.vpcA = "A";
    spec.vpcB = "A";
    CHECK_THROWS_AS(compose(unknot_1bridge(), unknot_1bridge(), spec), PreconditionError);
    spec.flipB = true;
    auto s = compose(unknot_1bridge(), unknot_1bridge(), spec);
    CHECK(validate_state(s).ok());
}

TEST_CASE("splitting a composite returns its factors") {
    auto s = compose(unknot_1bridge(), unknot_1bridge(), connected());
    auto [a, b] = decompose(s, "S");
    REQUIRE(validate_state(a).ok());
    REQUIRE(validate_state(b).ok());
    CHECK(net_invariants(a) == net_invariants(unknot_1bridge()));
    CHECK(net_invariants(b) == net_invariants(unknot_1bridge()));
    CHECK(a.surfaces.size() == 1);
}

TEST_CASE("splitting separates net genus 0 and 1 parts") {
    auto s = compose(unknot_1bridge(), torus_1bridge(), connected());
    auto [a, b] = decompose(s, "S");
    std::vector<Half> genera{net_invariants(a).netg, net_invariants(b).netg};
    std::sort(genera.begin(), genera.end());
    CHECK(genera == std::vector<Half>{Half(0), Half(1)});
    auto again = compose(a, b, connected());
    CHECK(net_invariants(again) == net_invariants(s));
}

TEST_CASE("splitting rejects non-spheres and spheres with four punctures") {
    auto s = four_punctured_sphere();
    REQUIRE(validate_state(s).ok());
    CHECK_THROWS_AS(decompose(s, "S"), PreconditionError);
    CHECK_THROWS_AS(decompose(torus_stack(2, 2), "F1"), PreconditionError);
    CHECK_THROWS_AS(decompose(unknot_1bridge(), "H"), PreconditionError);
}

TEST_CASE("cutting core loops reproduces the twin handlebody composite") {
    for (int t = 1; t <= 3; ++t) {
        auto spec = connected();
        spec.loopA = spec.loopB = true;
        spec.flipB = true;
        auto s = compose(handlebody_with_core_loop(t + 1), handlebody_with_core_loop(t + 1), spec);
        REQUIRE(validate_state(s).ok());
        auto b = net_invariants(s);
        CHECK(b == net_invariants(twin_handlebody_composite(t)));
        CHECK(b.netg == Half(2 * t + 2));
        CHECK(b.netw == Half(-2));
        CHECK(achieves_additivity_bound(s, additivity_bound(Half(0), Half(0), 1, 1, true, true)));
        auto [x, y] = decompose(s, "S");
        CHECK(x.vpcs[0].tangle.coreLoops + x.vpcs[1].tangle.coreLoops == 1);
        CHECK(net_invariants(x) == net_invariants(handlebody_with_core_loop(t + 1)));
    }
}

TEST_CASE("trivalent and cut-edge sums") {
    SumSpec tri;
    tri.kind = SumKind::trivalent;
    auto s = compose(theta_graph({1, 1, 1}), theta_graph({1, 1, 1}), tri);
    REQUIRE(validate_state(s).ok());
    CHECK(s.surface("S").punctures.size() == 3);
    auto [a, b] = decompose(s, "S");
    CHECK(net_invariants(a) == net_invariants(theta_graph({1, 1, 1})));
    CHECK(net_invariants(b) == net_invariants(theta_graph({1, 1, 1})));

    SumSpec cut;
    cut.kind = SumKind::cut_edge;
    auto e = compose(segment(), segment(), cut);
    REQUIRE(validate_state(e).ok());
    CHECK(e.surface("S").punctures.size() == 1);
    auto [c, d] = decompose(e, "S");
    CHECK(net_invariants(c) == net_invariants(segment()));
    CHECK(net_invariants(d) == net_invariants(segment()));
}

TEST_CASE("additivity bound arithmetic") {
    CHECK(additivity_bound(Half(3), Half(2), 1, 0) == Half(4));
    CHECK(additivity_bound(Half(3), Half(2), 1, 1) == Half(4));
    for (int x = 0; x <= 6; ++x) CHECK(additivity_bound(Half(x), Half(1), 1, 0) == Half(x));
    CHECK(additivity_bound(Half::from_twice(5), Half(1), 2, 0) == Half::from_twice(3));
    CHECK_THROWS_AS(additivity_bound(Half(1), Half(1), 1, 1, true), PreconditionError);
    CHECK_THROWS_AS(additivity_bound(Half(1), Half(1), 1, 2), PreconditionError);
    auto s = compose(bridge_sphere(3), bridge_sphere(2), connected());
    CHECK(achieves_additivity_bound(s, additivity_bound(Half(3), Half(2), 1, 0)));
}

TEST_CASE("cut edge reduction") {
    auto none = cut_edge_reduce(unknot_1bridge());
    CHECK(none.count == 0);
    CHECK(none.state == unknot_1bridge());

    SumSpec cut;
    cut.kind = SumKind::cut_edge;
    auto one = compose(segment(), segment(), cut);
    auto r1 = cut_edge_reduce(one);
    CHECK(r1.count == 1);
    CHECK(validate_state(r1.state).ok());

    cut.pointA = "P1";
    auto first = compose(tripod(), segment(), cut);
    cut.pointA = "a/P2";
    auto chained = compose(first, segment(), cut);
    REQUIRE(validate_state(chained).ok());
    auto r2 = cut_edge_reduce(chained);
    CHECK(r2.count == 2);
    CHECK(validate_state(r2.state).ok());
    for (const auto& surf : r2.state.surfaces)
        CHECK_FALSE((surf.role == Role::thin && surf.genus == 0 && surf.punctures.size() == 1));
}
