#include <algorithm>
#include <set>

#include "bridgecalc/moves.hpp"
#include "move_checks.hpp"
#include "strands.hpp"

namespace bridgecalc {

PairState amalgamate(const PairState& s, const std::string& vpc1, const std::string& vpc2) {
    const Vpc* c1 = s.find_vpc(vpc1);
    const Vpc* c2 = s.find_vpc(vpc2);
    if (!c1 || !c2) throw MoveRejected("amalgamation needs two existing VPCs");
    if (vpc1 == vpc2) throw MoveRejected("amalgamation needs two different VPCs");
    const Surface& h1 = s.surface(c1->positive);
    const Surface& h2 = s.surface(c2->positive);
    if (h1.id == h2.id) throw MoveRejected("the two VPCs share their thick surface");

    std::vector<const Surface*> shared;
    std::set<std::string> sharedIds;
    for (const auto& n : c1->negatives) {
        const Surface& f = s.surface(n);
        if (f.role == Role::thin && c2->has_negative(n)) {
            shared.push_back(&f);
            sharedIds.insert(n);
        }
    }
    if (shared.empty()) throw MoveRejected("'" + vpc1 + "' and '" + vpc2 + "' share no thin surface");

    std::set<std::string> fPunctures;
    for (const auto* f : shared)
        for (const auto& p : f->punctures) fPunctures.insert(p.id);
    std::set<std::string> ghostEnds;
    for (const auto& g : c1->tangle.ghost)
        for (const auto& e : {g.first, g.second})
            if (fPunctures.count(e)) ghostEnds.insert(e);
    for (const auto& g : c2->tangle.ghost)
        for (const auto& e : {g.first, g.second})
            if (ghostEnds.count(e)) throw MoveRejected("ghost arcs from both sides meet at '" + e + "'");

    const Vpc& a1 = s.vpc(s.other_side(h1.id, vpc1));
    const Vpc& a2 = s.vpc(s.other_side(h2.id, vpc2));

    Surface merged;
    merged.id = h1.id;
    merged.role = Role::thick;
    merged.genus = h1.genus + h2.genus + static_cast<int>(shared.size()) - 1;
    for (const auto* f : shared) merged.genus -= f->genus;
    const Surface* f0 = shared.front();
    merged.direction = f0->direction == vpc2 ? a2.id : a1.id;

    Vpc b1{a1.id, h1.id, a1.negatives, {}};
    Vpc b2{a2.id, h1.id, a2.negatives, {}};
    for (const auto& n : c2->negatives)
        if (!sharedIds.count(n)) b1.negatives.push_back(n);
    for (const auto& n : c1->negatives)
        if (!sharedIds.count(n)) b2.negatives.push_back(n);
    for (const auto* b : {&b1, &b2}) {
        std::set<std::string> distinct(b->negatives.begin(), b->negatives.end());
        if (distinct.size() != b->negatives.size())
            throw MoveRejected("VPC '" + b->id + "' would bound one surface twice");
    }
    b1.tangle.coreLoops = a1.tangle.coreLoops + c2->tangle.coreLoops;
    b2.tangle.coreLoops = a2.tangle.coreLoops + c1->tangle.coreLoops;

    // side 1 ends up in b1, side 2 in b2
    std::vector<detail::SideArc> arcs;
    auto add = [&](const Tangle& t, int side) {
        auto more = detail::side_arcs(t, side);
        arcs.insert(arcs.end(), more.begin(), more.end());
    };
    auto addC = [&](const Vpc& c, int stay, int cross) {
        for (const auto& a : all_arcs(c.tangle)) {
            bool toShared = c.tangle.vertical.end() !=
                                std::find(c.tangle.vertical.begin(), c.tangle.vertical.end(), a) &&
                            fPunctures.count(a.second);
            arcs.push_back({a.first, a.second, toShared ? stay : cross});
        }
    };
    add(a1.tangle, 1);
    addC(*c1, 1, 2);
    addC(*c2, 2, 1);
    add(a2.tangle, 2);

    std::set<std::string> internal = fPunctures;
    for (const auto* h : {&h1, &h2})
        for (const auto& p : h->punctures) internal.insert(p.id);
    auto strands = detail::glue_strands(arcs, internal);
    auto oldIdx = puncture_index(s);

    std::vector<std::vector<std::string>> segments;
    std::vector<int> segmentSides;
    for (const auto& st : strands) {
        std::size_t n = st.sides.size();
        std::vector<std::size_t> changes;
        for (std::size_t i = st.closed ? 0 : 1; i < n; ++i)
            if (st.sides[(i + n - 1) % n] != st.sides[i]) changes.push_back(i);
        if (st.closed && changes.empty()) {
            ++(st.sides[0] == 1 ? b1 : b2).tangle.coreLoops;
            continue;
        }
        for (auto i : changes) merged.punctures.push_back({st.nodes[i], oldIdx.at(st.nodes[i]).weight});
        // Split at each change; for a closed strand start at the first change.
        std::size_t start = st.closed ? changes.front() : 0;
        std::size_t count = n;
        std::vector<std::string> seg{st.nodes[start]};
        int side = st.sides[start];
        for (std::size_t j = 0; j < count; ++j) {
            std::size_t i = (start + j) % n;
            std::size_t next = st.closed ? (i + 1) % n : i + 1;
            seg.push_back(st.nodes[next]);
            bool boundary = next == (st.closed ? start : n) ||
                            std::find(changes.begin(), changes.end(), next) != changes.end();
            if (boundary) {
                segments.push_back(seg);
                segmentSides.push_back(side);
                seg = {st.nodes[next % st.nodes.size()]};
                if (next < n) side = st.sides[next];
            }
        }
    }

    PairState out;
    out.flags = s.flags;
    for (const auto& surf : s.surfaces) {
        if (surf.id == h1.id)
            out.surfaces.push_back(merged);
        else if (surf.id != h2.id && !sharedIds.count(surf.id))
            out.surfaces.push_back(surf);
    }
    auto idx = puncture_index(out);
    for (std::size_t k = 0; k < segments.size(); ++k)
        detail::place_arc(segmentSides[k] == 1 ? b1 : b2, segments[k].front(), segments[k].back(), idx);

    for (const auto& v : s.vpcs) {
        if (v.id == a1.id)
            out.vpcs.push_back(b1);
        else if (v.id == a2.id)
            out.vpcs.push_back(b2);
        else if (v.id != vpc1 && v.id != vpc2)
            out.vpcs.push_back(v);
    }
    for (auto& surf : out.surfaces) {
        if (surf.direction == vpc1) surf.direction = b2.id;
        if (surf.direction == vpc2) surf.direction = b1.id;
    }

    int wf = 0;
    for (const auto* f : shared) wf += f->weight();
    if (merged.weight() != h1.weight() + h2.weight() - wf)
        throw IdentityFailure("amalgamated thick surface has the wrong weight");
    detail::require_move_valid(out, "amalgamation");
    detail::require_same_invariants(s, out, "amalgamation");
    return out;
}

}  // namespace bridgecalc
