// End-to-end acceptance run. Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bridgecalc/catalog.hpp"
#include "bridgecalc/complexity.hpp"
#include "bridgecalc/crush.hpp"
#include "bridgecalc/driver.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/generator.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/json_io.hpp"
#include "bridgecalc/sums.hpp"
#include "bridgecalc/validate.hpp"
#include "bridgecalc/words.hpp"
#include "oracle.hpp"
#include "word_fixtures.hpp"

using namespace bridgecalc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures, keeping the first few messages.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> first;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (first.size() < 5) first.push_back(what);
    }
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (first.size() < 5) first.push_back(what());
    }
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome finish(const Tally& t, std::string detail) {
    Outcome o;
    o.pass = t.failures == 0;
    if (!o.pass) {
        detail += "; " + std::to_string(t.failures) + " failures";
        for (const auto& f : t.first) detail += "; " + f;
    }
    o.detail = std::move(detail);
    return o;
}

// Distinct states over seeds 0-9 at size 8, catalog included once.
const std::vector<PairState>& corpus() {
    static const std::vector<PairState> states = [] {
        std::vector<PairState> out;
        std::set<std::string> seen;
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            for (auto& s : generate_states(seed, 8))
                if (seen.insert(state_text(s)).second) out.push_back(std::move(s));
        return out;
    }();
    return states;
}

Half halved(Half h) { return Half::from_twice(h.twice() / 2); }

Outcome invariance() {
    auto t0 = Clock::now();
    Tally t;
    std::map<std::string, long> perOp;
    const auto& states = corpus();
    for (std::size_t i = 0; i < states.size(); ++i) {
        const PairState& s = states[i];
        InvariantBundle before = net_invariants(s);
        for (const auto& op : applicable_moves(s)) {
            try {
                PairState after = apply_move(s, op);
                ++perOp[op.op];
                t.check(validate_state(after).ok(), [&] { return "state " + std::to_string(i) + " " + op.op + " left an invalid state"; });
                t.check(net_invariants(after) == before, [&] {
                    return "state " + std::to_string(i) + " " + op.op + ": " + bundle_to_json(before).dump() + " -> " +
                           bundle_to_json(net_invariants(after)).dump();
                });
            } catch (const std::exception& e) {
                t.check(false, "state " + std::to_string(i) + " " + op.op + " threw: " + e.what());
            }
        }
    }
    double secs = seconds_since(t0);
    t.check(states.size() >= 1000, "only " + std::to_string(states.size()) + " distinct states");
    t.check(secs < 60, "took " + std::to_string(secs) + " s");
    for (const char* op : {"consolidate", "untelescope", "elementary", "amalgamate"})
        t.check(perOp[op] > 0, std::string("no ") + op + " move exercised");
    std::ostringstream d;
    d << states.size() << " states, moves";
    for (const auto& [op, n] : perOp) d << " " << op << "=" << n;
    d << ", " << static_cast<int>(secs + 0.5) << " s";
    return finish(t, d.str());
}

Outcome counting_identity() {
    Tally t;
    long cases = 0;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const PairState& s = corpus()[i];
        std::size_t unit = unit_vertices(s).size();
        t.check(unit <= 12, "state " + std::to_string(i) + " has too many unit vertices to enumerate");
        auto sets = admissible_vertex_sets(s, std::size_t{1} << 12);
        t.check(sets.size() == (std::size_t{1} << unit), "state " + std::to_string(i) + ": admissible sets truncated");
        for (int m : {1, 2, 3})
            for (const auto& U : sets) {
                ++cases;
                Half r = counting_identity_residual(s, m, U);
                t.check(r == Half(0), [&] { return "state " + std::to_string(i) + " m=" + std::to_string(m) + " residual " + r.str(); });
            }
    }
    return finish(t, std::to_string(cases) + " (state, m, U) cases");
}

// States with room for long thinning scripts, beyond the size-8 corpus.
std::vector<PairState> roomy_states() {
    return {empty_surface(8), handlebody_with_core_loop(7), bridge_surface(6, {1, 1, 1, 1}), bridge_surface(5, {2, 2, 1}),
            thicken(empty_surface(6), "H")};
}

Outcome termination() {
    Tally t;
    long runs = 0, stopped = 0;
    std::size_t longestScript = 0, longestTrace = 0;
    std::vector<PairState> states = corpus();
    for (auto& s : roomy_states()) states.push_back(std::move(s));
    Rng rng(2024);
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (bool noise : {false, true})
            for (bool greedy : {false, true}) {
                MoveScript script = random_thinning_script(states[i], rng, 50, noise);
                longestScript = std::max(longestScript, script.size());
                t.check(script.size() <= 50, "script longer than 50 moves");
                ++runs;
                try {
                    DriverResult r = thin_driver(states[i], script, greedy);
                    if (!r.completed) ++stopped;
                    longestTrace = std::max(longestTrace, r.trace.size());
                    t.check(!r.trace.empty() && r.trace[0].op == "start", "trace does not open with the start state");
                    for (std::size_t k = 1; k < r.trace.size(); ++k)
                        t.check(compare_complexity(r.trace[k].complexity, r.trace[k - 1].complexity) < 0, [&] {
                            return "state " + std::to_string(i) + " step " + std::to_string(k) + ": " +
                                   complexity_text(r.trace[k - 1].complexity) + " -> " + complexity_text(r.trace[k].complexity);
                        });
                    // Greedy consolidation renames surfaces a plain-mode script still refers to.
                    if (!noise && !greedy) t.check(r.completed, [&] { return "clean script stopped: " + r.error; });
                } catch (const std::exception& e) {
                    t.check(false, "state " + std::to_string(i) + " threw: " + e.what());
                }
            }
    }
    t.check(longestScript >= 20, "scripts never got long: " + std::to_string(longestScript));
    std::ostringstream d;
    d << runs << " runs (" << stopped << " stopped early), longest script " << longestScript
      << ", longest trace " << longestTrace;
    return finish(t, d.str());
}

Outcome lower_bounds() {
    Tally t;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        LowerBound lb = lower_bound_check(corpus()[i]);
        t.check(lb.satisfied && lb.netw >= lb.bound, [&] {
            return "state " + std::to_string(i) + ": netw " + lb.netw.str() + " below bound " + lb.bound.str();
        });
    }
    auto lens = catalog_states(10);
    for (std::size_t i = 0; i < lens.size(); ++i) {
        const PairState& s = lens[i];
        InvariantBundle b = net_invariants(s);
        t.check(lens_shape_check(s), "catalog state " + std::to_string(i) + " is not lens shaped");
        t.check(b.netg == Half(0) || b.netg == Half(1), "catalog state " + std::to_string(i) + " has net genus " + b.netg.str());
        t.check(b.netw >= Half(0), "catalog state " + std::to_string(i) + " has netw " + b.netw.str());
    }
    return finish(t, std::to_string(corpus().size()) + " generated states, " + std::to_string(lens.size()) +
                         " lens-shaped states up to size 10");
}

bool same_pair(const InvariantBundle& x, const InvariantBundle& y, const InvariantBundle& a, const InvariantBundle& b) {
    return (x == a && y == b) || (x == b && y == a);
}

Outcome additivity() {
    Tally t;
    // Small factors with a single thick surface, where netw / 2 is the bridge count.
    std::vector<PairState> factors;
    for (const auto& s : corpus()) {
        if (s.with_role(Role::thick).size() != 1 || s.size() > 5) continue;
        if (net_invariants(s).netg > Half(1)) continue;
        factors.push_back(s);
        if (factors.size() == 30) break;
    }
    long composites = 0, bounds = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = 0; j < factors.size(); ++j) {
            const PairState& a = factors[i];
            const PairState& b = factors[j];
            InvariantBundle ia = net_invariants(a), ib = net_invariants(b);
            for (SumKind kind : {SumKind::connected, SumKind::distant})
                for (int u : {1, 2})
                    for (bool flip : {false, true}) {
                        if (kind == SumKind::distant && u == 2) continue;
                        SumSpec spec;
                        spec.kind = kind;
                        spec.u = u;
                        spec.flipB = flip;
                        PairState c;
                        try {
                            c = compose(a, b, spec);
                        } catch (const PreconditionError&) {
                            continue;
                        }
                        ++composites;
                        auto where = [&] {
                            return sum_kind_name(kind) + " u=" + std::to_string(u) + " of factors " + std::to_string(i) +
                                   "," + std::to_string(j);
                        };
                        t.check(validate_state(c).ok(), [&] { return where() + " is invalid"; });
                        InvariantBundle ic = net_invariants(c);
                        int joined = kind == SumKind::connected ? u : 0;
                        t.check(halved(ic.netw) == halved(ia.netw) + halved(ib.netw) - Half(joined),
                                [&] { return where() + ": netw " + ic.netw.str(); });
                        if (kind == SumKind::connected && ic.netg <= Half(1)) {
                            ++bounds;
                            int g = static_cast<int>(ic.netg.twice() / 2);
                            Half bound = additivity_bound(halved(ia.netw), halved(ib.netw), u, g);
                            t.check(achieves_additivity_bound(c, bound), [&] { return where() + " misses " + bound.str(); });
                        }
                        try {
                            auto [x, y] = decompose(c, "S");
                            t.check(same_pair(net_invariants(x), net_invariants(y), ia, ib),
                                    [&] { return where() + ": split factors differ"; });
                        } catch (const std::exception& e) {
                            t.check(false, where() + ": split threw " + e.what());
                        }
                    }
        }
    t.check(bounds > 0, "no composite reached the additivity check");
    for (int tt = 1; tt <= 3; ++tt) {
        InvariantBundle b = net_invariants(twin_handlebody_composite(tt));
        t.check(halved(b.netw) == Half(-1) && b.netg == Half(2 * tt + 2),
                "twin handlebody t=" + std::to_string(tt) + ": netw " + b.netw.str() + ", netg " + b.netg.str());
        SumSpec spec;
        spec.loopA = spec.loopB = spec.flipB = true;
        PairState c = compose(handlebody_with_core_loop(tt + 1), handlebody_with_core_loop(tt + 1), spec);
        t.check(net_invariants(c) == b, "core loop sum differs from the twin handlebody, t=" + std::to_string(tt));
    }
    return finish(t, std::to_string(factors.size()) + " factors, " + std::to_string(composites) + " composites, " +
                         std::to_string(bounds) + " bound checks, twin handlebodies t=1..3");
}

void check_crush_structure(Tally& t, const CrushSpec& spec, const CrushResult& r, const std::string& where) {
    const PairState& s = r.state;
    t.check(validate_state(s).ok(), where + ": invalid after crushing");
    const Surface* v1 = s.find_surface(r.v1);
    const Surface* v2 = s.find_surface(r.v2);
    t.check(v1 && v2 && v1->role == Role::vertex && v2->role == Role::vertex, where + ": missing vertex spheres");
    if (!v1 || !v2) return;
    const Vpc* c = s.find_vpc(spec.vpc);
    t.check(c != nullptr, where + ": VPC gone");
    if (!c) return;
    auto index = puncture_index(s);
    int edges = 0;
    for (const auto& g : c->tangle.ghost) {
        bool between = (index[g.first].surface == r.v1 && index[g.second].surface == r.v2) ||
                       (index[g.first].surface == r.v2 && index[g.second].surface == r.v1);
        if (!between) continue;
        ++edges;
        t.check(index[g.first].weight == spec.omega && index[g.second].weight == spec.omega, where + ": new edge weight");
    }
    t.check(edges == 1, where + ": " + std::to_string(edges) + " edges between the vertex spheres");
    for (const Surface* v : {v1, v2}) {
        int unit = 0, heavy = 0;
        for (const auto& p : v->punctures) (p.weight == 1 ? unit : heavy) += 1;
        if (spec.omega == 1) unit -= 1;
        t.check(unit >= spec.omega && (spec.omega == 1 || heavy == 1), where + ": vertex sphere " + v->id + " ends");
    }
}

Outcome crushing() {
    Tally t;
    long applied = 0, refused = 0;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const PairState& s = corpus()[i];
        for (const auto& spec : crush_candidates(s)) {
            std::string where = "state " + std::to_string(i) + " vpc " + spec.vpc + " omega " + std::to_string(spec.omega);
            try {
                CrushResult r = crush(s, spec);
                ++applied;
                t.check(r.netchiAfter <= r.netchiBefore, where + ": netchi rose");
                t.check(r.netxAfter <= r.netxBefore, where + ": unweighted netx rose");
                check_crush_structure(t, spec, r, where);
            } catch (const PreconditionError&) {
                ++refused;
            } catch (const std::exception& e) {
                t.check(false, where + " threw: " + e.what());
            }
        }
    }
    t.check(applied > 0, "no crush applied");

    // Handle with two weight-1 punctures per disc, crushed to an edge of weight 2.
    const int omega = 2;
    PairState pre = two_bridge_unknot();
    CrushSpec spec;
    spec.vpc = "A";
    spec.d1 = spec.pi1 = {"H.1", "H.2"};
    spec.d2 = spec.pi2 = {"H.3", "H.4"};
    spec.omega = omega;
    CrushResult r = crush(pre, spec);
    check_crush_structure(t, spec, r, "worked instance");
    t.check(r.state.surface(r.v1).punctures.size() == 3 && r.state.surface(r.v2).punctures.size() == 3,
            "worked instance: vertex spheres need three ends");
    t.check(r.accountingHolds && r.accountingEqual, "worked instance: accounting");
    PairState companion = unknot_1bridge(omega);
    SumSpec join;
    join.u = omega;
    join.flipB = true;
    PairState joined = compose(companion, r.state, join);
    Half xj = raw_invariants(joined, {omega}).netx_m.at(omega);
    Half x0 = raw_invariants(companion, {omega}).netx_m.at(omega);
    Half x1 = raw_invariants(r.state, {omega}).netx_m.at(omega);
    t.check(oracle::of(xj) == oracle::of(x0) + oracle::of(x1) - oracle::x_m(0, 2 * omega, omega),
            "worked instance: netx splits along the edge");
    t.check(x1 >= Half(0), "worked instance: pattern netx negative");
    t.check(handle_crush_bound(halved(net_invariants(pre).netw), halved(net_invariants(companion).netw), omega, 0),
            "worked instance: crushing inequality");
    return finish(t, std::to_string(applied) + " crushes applied, " + std::to_string(refused) +
                         " candidate specs refused, worked instance checked");
}

Outcome calculators() {
    Tally t;
    auto doubled = [](int n, std::int64_t b) {
        for (int i = 0; i < n; ++i) b = b + b;
        return b;
    };
    auto added = [](int q, std::int64_t b) {
        std::int64_t total = 0;
        for (int i = 0; i < q; ++i) total += b;
        return total;
    };
    for (int k = 1; k <= 6; ++k)
        for (int b = 0; b <= 8; ++b) {
            t.check(whitehead_bound(k, Half(b)) == Half(doubled(k, b)), "whitehead " + std::to_string(k) + "," + std::to_string(b));
            t.check(cable_bound(k, Half(b)) == Half(added(k, b)), "cable " + std::to_string(k) + "," + std::to_string(b));
        }
    for (int b = 0; b <= 8; ++b)
        for (int delta : {0, 1}) {
            int expected = b - delta < 0 ? 0 : b - delta;
            t.check(omega_one_bound(Half(b), delta == 1) == Half(expected),
                    "omega one " + std::to_string(b) + " delta " + std::to_string(delta));
        }
    t.check(omega_one_bound(Half(5), false) == Half(5) && omega_one_bound(Half(5), true) == Half(4) &&
                omega_one_bound(Half(0), true) == Half(0),
            "omega one listed values");
    return finish(t, std::to_string(t.checks) + " values");
}

Outcome word_classifier() {
    auto t0 = Clock::now();
    Tally t;
    std::map<TorusOutcome, long> counts;
    auto stats = enumerate_words(10, [&](const AnnulusWord& w) {
        t.check(matching_length_parity(w), "odd matching run");
        bool towers = is_two_towers(w), bss = is_two_bss_plus_vss(w);
        bool crushable = !detect_crushable(w).empty(), cancellable = has_cancellable_pair(w);
        TorusClass c = classify_torus_config(w);
        ++counts[c.outcome];
        t.check(!(towers && bss), "two towers and two BSS at once");
        bool implied = false;
        switch (c.outcome) {
            case TorusOutcome::TwoTowers: implied = towers; break;
            case TorusOutcome::TwoBSSplusVSS: implied = bss && !towers; break;
            case TorusOutcome::HasCrushableCandidate: implied = crushable && !towers && !bss; break;
            case TorusOutcome::HasCancellablePair: implied = cancellable && !crushable && !towers && !bss; break;
            case TorusOutcome::Other: implied = !cancellable && !crushable && !towers && !bss && !c.report.empty(); break;
        }
        t.check(implied, [&] { return torus_outcome_name(c.outcome) + " without its defining predicate: " + word_to_json(w).dump(); });
    });
    double secs = seconds_since(t0);
    t.check(secs < 120, "took " + std::to_string(secs) + " s");
    t.check(stats.visited > 0, "nothing enumerated");

    using namespace word_fixtures;
    auto pairs = find_matched_pairs(length_four_pair());
    t.check(pairs.size() == 1 && pairs[0].length == 4, "length four pair");
    if (!pairs.empty()) t.check(is_cancellable(length_four_pair(), pairs[0]).kind == 1, "length four pair cancels");
    auto zero = zero_length_bnn_pair();
    auto zp = find_matched_pairs(zero);
    t.check(!zp.empty() && zp[0].length == 0 && is_cancellable(zero, zp[0]).kind == 3, "zero length BNN pair cancels");
    auto bns = bns_bss_pair();
    auto bp = find_matched_pairs(bns);
    bool bnsCancels = false;
    for (const auto& p : bp) bnsCancels = bnsCancels || is_cancellable(bns, p).kind == 2;
    t.check(bnsCancels && classify_torus_config(bns).outcome == TorusOutcome::HasCancellablePair, "BNS with BSS cancels");
    auto bnn = bnn_bns_pair();
    bool anyCancels = false;
    for (const auto& p : find_matched_pairs(bnn)) anyCancels = anyCancels || is_cancellable(bnn, p).cancellable;
    t.check(!find_matched_pairs(bnn).empty() && !anyCancels, "BNN with BNS does not cancel");
    auto handle = detect_crushable(outer_handle());
    t.check(handle.size() == 1 && handle[0].annulus == 0, "outer annulus is the one crushable handle");
    t.check(label_long_annulus(long_tube(), 0, 11) == RunLabel::tube, "tube through eleven annuli");
    t.check(label_long_annulus(long_tube(), 0, 12) == RunLabel::neither, "twelve annuli are not a tube");
    t.check(classify_torus_config(spell("VNN/u BNN/c VNN/d VNN/u BNN/c VNN/d", ForestMode::chain)).outcome ==
                TorusOutcome::TwoTowers,
            "two towers instance");
    t.check(classify_torus_config(spell("BSS/c VSS/d VSS/u BSS/c VSS/d VSS/u", ForestMode::chain)).outcome ==
                TorusOutcome::TwoBSSplusVSS,
            "two BSS instance");

    std::ostringstream d;
    d << stats.visited << " words (" << stats.invalid << " rejected),";
    for (const auto& [o, n] : counts) d << " " << torus_outcome_name(o) << "=" << n;
    d << ", " << static_cast<int>(secs + 0.5) << " s";
    return finish(t, d.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"invariance under moves", invariance},
        {"counting identity", counting_identity},
        {"termination and monotonicity", termination},
        {"lower bounds", lower_bounds},
        {"additivity", additivity},
        {"crushing arithmetic", crushing},
        {"calculators", calculators},
        {"word classifier", word_classifier},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.detail = std::string("threw: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::printf("criterion %zu %s: %s (%s) [%.1f s]\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
