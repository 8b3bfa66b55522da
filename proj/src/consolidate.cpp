#include <algorithm>
#include <set>

#include "bridgecalc/classify.hpp"
#include "bridgecalc/dual_graph.hpp"
#include "bridgecalc/moves.hpp"
#include "move_checks.hpp"
#include "strands.hpp"

namespace bridgecalc {

namespace {

// Reverses `sid` and every edge on its far side as seen from `near`.
void flip_pendant(PairState& s, const std::string& sid, const std::string& near) {
    if (!s.flags.everySphereSeparates)
        throw MoveRejected("reorienting sphere '" + sid + "' needs every sphere to separate");
    auto parts = vpc_components(s, {sid});
    if (parts.size() != 2) throw MoveRejected("sphere '" + sid + "' does not separate the dual graph");
    const auto& far = parts[0].count(near) ? parts[1] : parts[0];
    for (const auto& e : dual_edges(s))
        if (e.surface != sid && far.count(e.tail) && far.count(e.head)) detail::flip_direction(s, e.surface);
    detail::flip_direction(s, sid);
}

}  // namespace

PairState consolidate(const PairState& s, const std::string& thickId, const std::string& thinId) {
    const Surface* h = s.find_surface(thickId);
    const Surface* f = s.find_surface(thinId);
    if (!h || h->role != Role::thick) throw MoveRejected("'" + thickId + "' is not a thick surface");
    if (!f || f->role != Role::thin) throw MoveRejected("'" + thinId + "' is not a thin surface");

    std::string cId;
    for (const auto& v : s.vpcs)
        if (v.positive == thickId && v.has_negative(thinId) && is_punctured_product_between(s, v.id, thinId)) {
            cId = v.id;
            break;
        }
    if (cId.empty())
        throw MoveRejected("no product or punctured product between '" + thickId + "' and '" + thinId + "'");
    std::string aId = s.other_side(thickId, cId);
    std::string eId = s.other_side(thinId, cId);
    if (aId == eId)
        throw MoveRejected("'" + thickId + "' and '" + thinId + "' bound the same pair of VPCs");
    const Vpc& A = s.vpc(aId);
    const Vpc& C = s.vpc(cId);
    const Vpc& E = s.vpc(eId);

    Vpc merged;
    merged.id = eId;
    merged.positive = E.positive;
    std::vector<std::string> pendant;
    for (const auto& n : E.negatives)
        if (n != thinId) merged.negatives.push_back(n);
    for (const auto& n : A.negatives) merged.negatives.push_back(n);
    for (const auto& n : C.negatives)
        if (n != thinId) {
            merged.negatives.push_back(n);
            if (s.surface(n).role == Role::thin) pendant.push_back(n);
        }
    std::set<std::string> distinct(merged.negatives.begin(), merged.negatives.end());
    if (distinct.size() != merged.negatives.size())
        throw MoveRejected("the merged VPC would bound one surface twice");

    std::set<std::string> internal;
    for (const auto* surf : {h, f})
        for (const auto& p : surf->punctures) internal.insert(p.id);
    std::vector<detail::SideArc> arcs;
    for (const Vpc* v : {&A, &C, &E}) {
        auto more = detail::side_arcs(v->tangle, 0);
        arcs.insert(arcs.end(), more.begin(), more.end());
    }
    auto strands = detail::glue_strands(arcs, internal);
    merged.tangle.coreLoops = A.tangle.coreLoops + C.tangle.coreLoops + E.tangle.coreLoops;

    PairState out;
    out.flags = s.flags;
    for (const auto& surf : s.surfaces)
        if (surf.id != thickId && surf.id != thinId) out.surfaces.push_back(surf);
    auto idx = puncture_index(out);
    for (const auto& st : strands) {
        if (st.closed)
            ++merged.tangle.coreLoops;
        else
            detail::place_arc(merged, st.nodes.front(), st.nodes.back(), idx);
    }
    for (const auto& v : s.vpcs) {
        if (v.id == aId || v.id == cId) continue;
        out.vpcs.push_back(v.id == eId ? merged : v);
    }
    for (auto& surf : out.surfaces)
        if (surf.direction == aId || surf.direction == cId) surf.direction = eId;

    // A sphere that came across from C must point out of the merged VPC exactly when its thick surface points in.
    bool thickIn = out.surface(merged.positive).direction == eId;
    for (const auto& pid : pendant) {
        bool pointsIn = out.surface(pid).direction == eId;
        if (pointsIn == thickIn) flip_pendant(out, pid, eId);
    }

    detail::require_move_valid(out, "consolidation");
    detail::require_same_invariants(s, out, "consolidation");
    return out;
}

std::vector<std::pair<std::string, std::string>> consolidation_candidates(const PairState& s) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : s.vpcs) {
        auto cls = classify_vpc(s, v.id);
        if (cls.kind != VpcKind::product && cls.kind != VpcKind::punctured_product) continue;
        const Surface* partner = s.find_surface(cls.partner);
        if (!partner || partner->role != Role::thin) continue;
        try {
            consolidate(s, v.positive, cls.partner);
        } catch (const MoveRejected&) {
            continue;
        }
        out.emplace_back(v.positive, cls.partner);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace bridgecalc
