#include "bridgecalc/generator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bridgecalc/catalog.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/json_io.hpp"
#include "bridgecalc/moves.hpp"
#include "bridgecalc/sums.hpp"
#include "bridgecalc/validate.hpp"

namespace bridgecalc {

namespace {

bool id_in_use(const PairState& s, const std::string& id) {
    return s.find_surface(id) || s.find_vpc(id);
}

std::string fresh_id(const PairState& s, const std::string& base) {
    if (!id_in_use(s, base)) return base;
    for (int i = 2;; ++i)
        if (!id_in_use(s, base + std::to_string(i))) return base + std::to_string(i);
}

bool usable(const PairState& s, int maxSize) {
    return static_cast<int>(s.size()) <= maxSize && s.flags.everySphereSeparates && validate_state(s).ok();
}

bool lens_shaped(const PairState& s) {
    try {
        return raw_invariants(s).netg <= Half(1) && lens_shape_check(s);
    } catch (const PreconditionError&) {
        return false;
    }
}

void add_unique(std::vector<PairState>& out, PairState s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

// Tries the second factor as given, then reversed.
std::optional<PairState> try_compose(const PairState& a, const PairState& b, SumSpec spec) {
    for (bool flip : {false, true}) {
        spec.flipB = flip;
        try {
            return compose(a, b, spec);
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

std::vector<PairState> small_bases() {
    return {bridge_sphere(0),
            unknot_1bridge(1),
            unknot_1bridge(2),
            bridge_sphere(2),
            bridge_sphere(2, {1, 2}),
            two_bridge_unknot(),
            bridge_sphere(3),
            empty_surface(1),
            torus_with_core_loop(),
            torus_1bridge(1),
            torus_1bridge(2)};
}

PairState random_base(Rng& rng) {
    auto weight = [&] { return pick(rng, 4) ? 1 : 2 + static_cast<int>(pick(rng, 2)); };
    switch (pick(rng, 5)) {
        case 0: {
            int genus = static_cast<int>(pick(rng, 4));
            std::vector<int> weights(pick(rng, 5));
            for (auto& w : weights) w = weight();
            int loops = genus == 0 ? 0 : static_cast<int>(pick(rng, genus + 1));
            return bridge_surface(genus, weights, loops);
        }
        case 1: {
            std::vector<int> weights(3 + pick(rng, 3));
            for (auto& w : weights) w = weight();
            return theta_graph(weights);
        }
        case 2: return torus_stack(2, 2 * static_cast<int>(pick(rng, 3)), pick(rng, 2) == 0);
        case 3: return empty_surface(1 + static_cast<int>(pick(rng, 4)));
        default: {
            auto bases = small_bases();
            return bases[pick(rng, bases.size())];
        }
    }
}

std::vector<std::string> thick_ids(const PairState& s) {
    std::vector<std::string> out;
    for (const auto& f : s.surfaces)
        if (f.role == Role::thick) out.push_back(f.id);
    return out;
}

// Connected pieces of a VPC's tangle as seen from its positive boundary.
struct Component {
    std::vector<std::string> punctures;  // on the positive boundary
    std::vector<std::string> negatives;
};

std::vector<Component> tangle_components(const PairState& s, const Vpc& v) {
    auto idx = puncture_index(s);
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return parent[x] = x;
        return it->second = find(it->second);
    };
    auto node = [&](const std::string& p) {
        const auto& surf = idx.at(p).surface;
        return surf == v.positive ? p : "#" + surf;
    };
    for (const auto& p : s.surface(v.positive).punctures) find(p.id);
    for (const auto& n : v.negatives) find("#" + n);
    for (const auto& [x, y] : all_arcs(v.tangle)) parent[find(node(x))] = find(node(y));
    std::map<std::string, Component> comps;
    std::vector<std::string> order;
    auto touch = [&](const std::string& root) -> Component& {
        if (!comps.count(root)) order.push_back(root);
        return comps[root];
    };
    for (const auto& p : s.surface(v.positive).punctures) touch(find(p.id)).punctures.push_back(p.id);
    for (const auto& n : v.negatives) touch(find("#" + n)).negatives.push_back(n);
    std::vector<Component> out;
    for (const auto& r : order) out.push_back(comps[r]);
    return out;
}

std::vector<SideSplit> side_splits(const PairState& s, const Vpc& v, int genus, std::size_t limit) {
    auto comps = tangle_components(s, v);
    std::size_t k = std::min<std::size_t>(comps.size(), 6);
    std::vector<SideSplit> out;
    for (unsigned mask = 1; mask < (1u << k) && out.size() < limit; ++mask) {
        if (!(mask & 1u)) continue;
        SideSplit a;
        std::size_t bPunctures = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            bool inA = i < k && (mask & (1u << i));
            if (inA) {
                a.punctures.insert(a.punctures.end(), comps[i].punctures.begin(), comps[i].punctures.end());
                a.negatives.insert(a.negatives.end(), comps[i].negatives.begin(), comps[i].negatives.end());
            } else {
                bPunctures += comps[i].punctures.size();
            }
        }
        for (int ga = 0; ga <= genus && out.size() < limit; ++ga) {
            bool aOk = ga > 0 || !a.punctures.empty();
            bool bOk = genus - ga > 0 || bPunctures > 0;
            if (!aOk || !bOk) continue;
            SideSplit sp = a;
            sp.genus = ga;
            out.push_back(sp);
        }
    }
    return out;
}

DiscSpec compressing(const std::string& vpc) {
    DiscSpec d;
    d.vpc = vpc;
    return d;
}

std::optional<DiscSpec> cutting(const PairState& s, const Vpc& v) {
    auto idx = puncture_index(s);
    for (const auto& arc : all_arcs(v.tangle)) {
        if (idx.at(arc.first).surface != v.positive && idx.at(arc.second).surface != v.positive) continue;
        DiscSpec d = compressing(v.id);
        d.p = 1;
        d.arc = arc;
        d.scarWeight = idx.at(arc.first).weight;
        return d;
    }
    return std::nullopt;
}

DiscSpec separating(const std::string& vpc, const SideSplit& sp) {
    DiscSpec d = compressing(vpc);
    d.separating = true;
    d.split = sp;
    return d;
}

template <typename F>
bool attempt(F&& f) {
    try {
        f();
        return true;
    } catch (const MoveRejected&) {
    } catch (const PreconditionError&) {
    } catch (const InvalidState&) {
    }
    return false;
}

}  // namespace

PairState bridge_surface(int genus, const std::vector<int>& weights, int coreLoops) {
    PairState s = bridge_sphere(static_cast<int>(weights.size()), weights);
    s.surfaces[0].genus = genus;
    s.vpcs[1].tangle.coreLoops = coreLoops;
    return s;
}

PairState thicken(const PairState& s, const std::string& thickId) {
    const Surface* hp = s.find_surface(thickId);
    if (!hp || hp->role != Role::thick) throw PreconditionError("'" + thickId + "' is not a thick surface");
    const Surface h = *hp;
    std::string yId = s.other_side(h.id, h.direction);
    PairState out = s;
    std::string fId = fresh_id(out, h.id + "^f");
    Surface f{fId, Role::thin, h.genus, {}, ""};
    out.surfaces.push_back(f);
    std::string h2Id = fresh_id(out, h.id + "^h");
    Surface h2{h2Id, Role::thick, h.genus, {}, ""};
    out.surfaces.push_back(h2);
    std::string pId = fresh_id(out, h.id + "^p");
    out.vpcs.push_back({pId, h.id, {fId}, {}});
    std::string qId = fresh_id(out, h.id + "^q");
    out.vpcs.push_back({qId, h2Id, {fId}, {}});

    Surface* fs = out.find_surface(fId);
    Surface* hs = out.find_surface(h2Id);
    fs->direction = pId;
    hs->direction = qId;
    std::map<std::string, std::string> rename;
    Vpc* p = out.find_vpc(pId);
    Vpc* q = out.find_vpc(qId);
    for (std::size_t i = 0; i < h.punctures.size(); ++i) {
        std::string fp = fId + "." + std::to_string(i + 1), hp2 = h2Id + "." + std::to_string(i + 1);
        fs->punctures.push_back({fp, h.punctures[i].weight});
        hs->punctures.push_back({hp2, h.punctures[i].weight});
        p->tangle.vertical.push_back({h.punctures[i].id, fp});
        q->tangle.vertical.push_back({hp2, fp});
        rename[h.punctures[i].id] = hp2;
    }
    Vpc* y = out.find_vpc(yId);
    y->positive = h2Id;
    for (auto* arcs : {&y->tangle.bridge, &y->tangle.vertical, &y->tangle.ghost})
        for (auto& [a, b] : *arcs) {
            if (rename.count(a)) a = rename[a];
            if (rename.count(b)) b = rename[b];
        }
    return out;
}

std::vector<PairState> catalog_states(int maxSize) {
    std::vector<PairState> out;
    auto keep = [&](const PairState& s) {
        if (usable(s, maxSize) && lens_shaped(s)) add_unique(out, s);
    };
    auto bases = small_bases();
    for (const auto& b : bases) keep(b);
    for (const auto& w : std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 2}, {1, 1, 1, 1}}) keep(theta_graph(w));
    for (int k = 2; 4 * k - 1 <= maxSize; ++k)
        for (int p : {0, 2})
            for (bool loop : {false, true}) keep(torus_stack(k, p, loop));
    std::vector<PairState> layer = bases;
    while (!layer.empty()) {
        std::vector<PairState> next;
        for (const auto& s : layer)
            for (const auto& h : thick_ids(s)) {
                if (static_cast<int>(s.size()) + 4 > maxSize) continue;
                PairState t = thicken(s, h);
                keep(t);
                next.push_back(t);
            }
        layer = std::move(next);
    }
    if (2 * 3 + 1 <= maxSize) {
        for (std::size_t i = 0; i < bases.size(); ++i)
            for (std::size_t j = i; j < bases.size(); ++j) {
                for (SumKind kind : {SumKind::connected, SumKind::distant}) {
                    SumSpec spec;
                    spec.kind = kind;
                    bool loopA = bases[i].vpcs[1].tangle.coreLoops > 0, loopB = bases[j].vpcs[1].tangle.coreLoops > 0;
                    if (kind == SumKind::connected && (loopA || loopB)) {
                        spec.loopA = loopA;
                        spec.loopB = loopB;
                        if (loopA) spec.vpcA = "B";
                        if (loopB) spec.vpcB = "B";
                    }
                    for (int u : {1, 2}) {
                        if (kind == SumKind::distant && u == 2) continue;
                        spec.u = u;
                        if (auto c = try_compose(bases[i], bases[j], spec)) keep(*c);
                    }
                }
            }
    }
    return out;
}

std::vector<Untelescoping> untelescoping_candidates(const PairState& s, std::size_t limit) {
    std::vector<Untelescoping> out;
    auto add = [&](const std::string& h, DiscSpec plus, DiscSpec minus) {
        if (out.size() < limit) out.push_back({h, std::move(plus), std::move(minus), std::nullopt});
    };
    for (const auto& hid : thick_ids(s)) {
        const Surface& h = s.surface(hid);
        const Vpc& x = s.vpc(h.direction);
        const Vpc& y = s.vpc(s.other_side(hid, h.direction));
        if (h.genus >= 2) {
            add(hid, compressing(x.id), compressing(y.id));
            if (auto c = cutting(s, y)) add(hid, compressing(x.id), *c);
            if (auto c = cutting(s, x)) add(hid, *c, compressing(y.id));
        }
        auto xs = side_splits(s, x, h.genus, 8), ys = side_splits(s, y, h.genus, 8);
        for (const auto& sp : xs) {
            for (const char* w : {"a", "b"}) {
                int sideGenus = std::string(w) == "a" ? sp.genus : h.genus - sp.genus;
                if (sideGenus < 1) continue;
                DiscSpec m = compressing(y.id);
                m.within = w;
                add(hid, separating(x.id, sp), m);
            }
            for (const auto& sq : ys) add(hid, separating(x.id, sp), separating(y.id, sq));
        }
        for (const auto& sq : ys)
            for (const char* w : {"a", "b"}) {
                int sideGenus = std::string(w) == "a" ? sq.genus : h.genus - sq.genus;
                if (sideGenus < 1) continue;
                DiscSpec p = compressing(x.id);
                p.within = w;
                add(hid, p, separating(y.id, sq));
            }
    }
    return out;
}

std::vector<MoveOp> applicable_moves(const PairState& s, std::size_t limit) {
    std::vector<MoveOp> out;
    for (const auto& [h, f] : consolidation_candidates(s)) {
        if (out.size() >= limit) return out;
        MoveOp op;
        op.op = "consolidate";
        op.thick = h;
        op.thin = f;
        out.push_back(op);
    }
    for (const auto& u : untelescoping_candidates(s, limit)) {
        if (out.size() >= limit) return out;
        MoveOp op;
        op.op = "untelescope";
        op.untelescoping = u;
        if (!attempt([&] { untelescope(s, u); })) continue;
        out.push_back(op);
        ElementaryResult r;
        if (attempt([&] { r = elementary_thinning(s, u); }) && r.consolidations > 0 && out.size() < limit) {
            op.op = "elementary";
            out.push_back(op);
        }
    }
    for (std::size_t i = 0; i < s.vpcs.size(); ++i)
        for (std::size_t j = i + 1; j < s.vpcs.size(); ++j) {
            if (out.size() >= limit) return out;
            const auto& a = s.vpcs[i];
            const auto& b = s.vpcs[j];
            bool share = std::any_of(a.negatives.begin(), a.negatives.end(), [&](const std::string& n) {
                return b.has_negative(n);
            });
            if (!share || !attempt([&] { amalgamate(s, a.id, b.id); })) continue;
            MoveOp op;
            op.op = "amalgamate";
            op.vpc1 = a.id;
            op.vpc2 = b.id;
            out.push_back(op);
        }
    return out;
}

MoveScript random_thinning_script(const PairState& s, Rng& rng, int maxMoves, bool noise) {
    MoveScript script;
    PairState cur = s;
    for (int i = 0; i < maxMoves; ++i) {
        if (noise && pick(rng, 8) == 0) {
            MoveOp bad;
            bad.op = pick(rng, 2) ? "consolidate" : "untelescope";
            bad.thick = "missing";
            bad.thin = "missing";
            bad.untelescoping.thick = thick_ids(cur).empty() ? "missing" : thick_ids(cur).front();
            script.push_back(bad);
            continue;
        }
        std::vector<MoveOp> moves;
        for (auto& m : applicable_moves(cur, 8))
            if (m.op != "amalgamate") moves.push_back(std::move(m));
        if (moves.empty()) break;
        const MoveOp& m = moves[pick(rng, moves.size())];
        cur = apply_move(cur, m);
        script.push_back(m);
    }
    return script;
}

std::vector<CrushSpec> crush_candidates(const PairState& s) {
    std::vector<CrushSpec> out;
    auto idx = puncture_index(s);
    for (const auto& v : s.vpcs) {
        std::vector<Arc> unit;
        for (const auto& arc : v.tangle.bridge)
            if (idx.at(arc.first).weight == 1 && idx.at(arc.first).surface == v.positive) unit.push_back(arc);
        for (const auto& [p, q] : unit) out.push_back({v.id, {p}, {q}, {p}, {q}, {}, 1});
        for (std::size_t i = 0; i < unit.size() && i < 4; ++i)
            for (std::size_t j = i + 1; j < unit.size() && j < 4; ++j)
                for (int omega : {1, 2}) {
                    std::vector<std::string> d1{unit[i].first, unit[j].first}, d2{unit[i].second, unit[j].second};
                    out.push_back({v.id, d1, d2, d1, d2, {}, omega});
                }
        for (const auto& n : v.negatives) {
            const Surface& f = s.surface(n);
            if (f.role != Role::thin || f.genus != 0) continue;
            std::vector<std::string> ends;
            bool ok = true;
            for (const auto& [a, b] : all_arcs(v.tangle)) {
                bool aIn = idx.at(a).surface == n, bIn = idx.at(b).surface == n;
                if (!aIn && !bIn) continue;
                const std::string& other = aIn ? b : a;
                if (idx.at(other).surface != v.positive || idx.at(other).weight != 1) ok = false;
                else ends.push_back(other);
            }
            if (!ok || ends.size() < 2) continue;
            std::vector<std::string> d1{ends[0]}, d2(ends.begin() + 1, ends.end());
            out.push_back({v.id, d1, d2, d1, d2, {n}, 1});
        }
    }
    return out;
}

std::vector<PairState> generate_states(std::uint64_t seed, int maxSize, int samples) {
    std::vector<PairState> out = catalog_states(maxSize);
    std::set<std::string> seen;
    for (const auto& s : out) seen.insert(state_text(s));
    Rng rng(seed);
    int produced = 0;
    for (int attempts = 0; produced < samples && attempts < samples * 200; ++attempts) {
        int sphere = 0;
        PairState s = random_base(rng);
        int steps = static_cast<int>(pick(rng, 4));
        for (int t = 0; t < steps; ++t) {
            switch (pick(rng, 4)) {
                case 0: {
                    SumSpec spec;
                    spec.kind = pick(rng, 3) == 0 ? SumKind::distant : SumKind::connected;
                    spec.sphereId = "S" + std::to_string(++sphere);
                    if (auto c = try_compose(s, random_base(rng), spec)) s = *c;
                    break;
                }
                case 1: {
                    auto ids = thick_ids(s);
                    if (!ids.empty()) s = thicken(s, ids[pick(rng, ids.size())]);
                    break;
                }
                case 2: {
                    auto us = untelescoping_candidates(s, 32);
                    for (std::size_t i = us.size(); i > 1; --i) std::swap(us[i - 1], us[pick(rng, i)]);
                    for (std::size_t i = 0; i < us.size() && i < 8; ++i)
                        if (attempt([&] { s = untelescope(s, us[i]); })) break;
                    break;
                }
                default: {
                    auto moves = applicable_moves(s, 16);
                    if (!moves.empty()) s = apply_move(s, moves[pick(rng, moves.size())]);
                    break;
                }
            }
        }
        if (!usable(s, maxSize) || !seen.insert(state_text(s)).second) continue;
        out.push_back(std::move(s));
        ++produced;
    }
    return out;
}

}  // namespace bridgecalc
