#include "bridgecalc/crush.hpp"

#include <algorithm>
#include <set>

#include "bridgecalc/dual_graph.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/validate.hpp"
#include "strands.hpp"

namespace bridgecalc {

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v, const std::string& what) {
    std::set<std::string> out(v.begin(), v.end());
    if (out.size() != v.size()) throw PreconditionError(what + " lists a puncture twice");
    return out;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Half half_of(Half even) { return Half::from_twice(even.twice() / 2); }

}  // namespace

CrushResult crush(const PairState& s, const CrushSpec& spec) {
    require_valid(s);
    const Vpc* cp = s.find_vpc(spec.vpc);
    if (!cp) throw PreconditionError("no VPC '" + spec.vpc + "'");
    const Vpc& c = *cp;
    if (spec.omega < 1) throw PreconditionError("wrapping number must be at least 1");
    const Surface& top = s.surface(c.positive);
    std::set<std::string> onTop;
    for (const auto& p : top.punctures) onTop.insert(p.id);
    auto d1 = as_set(spec.d1, "d1"), d2 = as_set(spec.d2, "d2");
    auto pi1 = as_set(spec.pi1, "pi1"), pi2 = as_set(spec.pi2, "pi2");
    if (!subset(d1, onTop) || !subset(d2, onTop))
        throw PreconditionError("disc punctures must lie on the positive boundary of '" + c.id + "'");
    for (const auto& p : d1)
        if (d2.count(p)) throw PreconditionError("the two discs share puncture '" + p + "'");
    if (!subset(pi1, d1) || !subset(pi2, d2)) throw PreconditionError("handle punctures must lie in their discs");
    if (static_cast<int>(pi1.size()) < spec.omega || static_cast<int>(pi2.size()) < spec.omega)
        throw PreconditionError("each end of the crushed edge needs degree at least omega + 1");
    auto idx = puncture_index(s);
    for (const auto* pi : {&pi1, &pi2})
        for (const auto& p : *pi)
            if (idx.at(p).weight != 1) throw PreconditionError("handle puncture '" + p + "' must have weight 1");

    std::set<std::string> dropVpcs, roots;
    for (const auto& id : spec.inside) {
        const Surface* surf = s.find_surface(id);
        if (!surf || !c.has_negative(id)) continue;
        if (surf->role != Role::thin || surf->genus != 0)
            throw PreconditionError("'" + id + "' inside the handle is not a thin sphere");
        if (!s.flags.everySphereSeparates) throw PreconditionError("discarding a subtree needs every sphere to separate");
        auto parts = vpc_components(s, {id});
        if (parts.size() != 2) throw PreconditionError("'" + id + "' does not cut off a subtree");
        const auto& far = parts[0].count(c.id) ? parts[1] : parts[0];
        dropVpcs.insert(far.begin(), far.end());
        roots.insert(id);
    }
    std::set<std::string> dropSurfaces = roots;
    for (const auto& surf : s.surfaces) {
        auto adj = s.adjacent_vpcs(surf.id);
        if (!adj.empty() && std::all_of(adj.begin(), adj.end(), [&](const std::string& v) { return dropVpcs.count(v); }))
            dropSurfaces.insert(surf.id);
    }
    for (const auto& id : spec.inside)
        if (!dropSurfaces.count(id) && !dropVpcs.count(id))
            throw PreconditionError("'" + id + "' is not inside a subtree cut off by a listed sphere");

    std::set<std::string> region(pi1.begin(), pi1.end());
    region.insert(pi2.begin(), pi2.end());
    for (const auto& r : roots)
        for (const auto& p : s.surface(r).punctures) region.insert(p.id);
    std::vector<Arc> kept;
    for (const auto& a : all_arcs(c.tangle)) {
        bool in1 = region.count(a.first), in2 = region.count(a.second);
        if (in1 != in2) throw PreconditionError("arc (" + a.first + ", " + a.second + ") leaves the handle region");
        if (!in1) kept.push_back(a);
    }

    CrushResult res;
    res.v1 = c.id + ":v1";
    res.v2 = c.id + ":v2";
    Surface v1, v2;
    v1.id = res.v1;
    v2.id = res.v2;
    v1.role = v2.role = Role::vertex;
    for (auto [v, pi] : {std::pair{&v1, &spec.pi1}, std::pair{&v2, &spec.pi2}}) {
        int k = 0;
        for (const auto& p : *pi) {
            std::string end = v->id + "." + std::to_string(++k);
            v->punctures.push_back({end, 1});
            kept.push_back({p, end});
        }
        v->punctures.push_back({v->id + ".e", spec.omega});
    }
    kept.push_back({v1.id + ".e", v2.id + ".e"});
    if (s.find_surface(v1.id) || s.find_surface(v2.id)) throw PreconditionError("vertex sphere ids are in use");

    PairState& out = res.state;
    out.flags = s.flags;
    for (const auto& surf : s.surfaces)
        if (!dropSurfaces.count(surf.id)) out.surfaces.push_back(surf);
    out.surfaces.push_back(v1);
    out.surfaces.push_back(v2);
    for (const auto& v : s.vpcs)
        if (!dropVpcs.count(v.id)) out.vpcs.push_back(v);
    Vpc& nc = *out.find_vpc(c.id);
    nc.negatives.erase(std::remove_if(nc.negatives.begin(), nc.negatives.end(),
                                      [&](const std::string& n) { return roots.count(n) > 0; }),
                       nc.negatives.end());
    nc.negatives.push_back(v1.id);
    nc.negatives.push_back(v2.id);
    nc.tangle.bridge.clear();
    nc.tangle.vertical.clear();
    nc.tangle.ghost.clear();
    auto outIdx = puncture_index(out);
    for (const auto& a : kept) detail::place_arc(nc, a.first, a.second, outIdx);

    auto report = validate_state(out);
    if (!report.ok()) throw PreconditionError("crushing gives an ill-formed state: " + report.summary());

    auto before = raw_invariants(s, {spec.omega});
    auto after = raw_invariants(out, {spec.omega});
    res.netchiBefore = before.netchi;
    res.netchiAfter = after.netchi;
    res.netxBefore = raw_invariants(unweighted(s)).netx;
    res.netxAfter = raw_invariants(unweighted(out)).netx;
    if (res.netchiAfter > res.netchiBefore) throw IdentityFailure("crushing increased netchi");
    if (res.netxAfter > res.netxBefore) throw IdentityFailure("crushing increased unweighted netx");
    res.accountingLhs = after.netx_m.at(spec.omega);
    res.accountingRhs = half_of(res.netchiAfter) * (spec.omega - 1) + res.netxBefore;
    res.accountingHolds = res.accountingLhs <= res.accountingRhs;
    res.accountingEqual = res.accountingLhs == res.accountingRhs;
    bool unitWeights = true;
    for (const auto& surf : out.surfaces)
        if (surf.role == Role::thick || surf.role == Role::thin)
            for (const auto& p : surf.punctures) unitWeights = unitWeights && p.weight == 1;
    if (unitWeights && !res.accountingHolds) throw IdentityFailure("crushing broke the netx_omega accounting");
    return res;
}

bool handle_crush_bound(Half netwHOver2, Half netwLOver2, int omega, int g1) {
    return netwHOver2 >= netwLOver2 - Half(static_cast<std::int64_t>(omega) * g1);
}

Half whitehead_bound(int n, Half b1K) {
    if (n < 1) throw PreconditionError("whitehead doubling count must be at least 1");
    return b1K * (std::int64_t{1} << n);
}

Half cable_bound(int q, Half b1K) {
    if (q < 1) throw PreconditionError("cable winding must be at least 1");
    return b1K * q;
}

Half satellite_bounds(const SatelliteQuery& q) {
    if (q.b1K < Half(0)) throw PreconditionError("b_1 of the companion is nonnegative");
    if (q.exceptionalCompanion)
        throw PreconditionError("the bound does not apply to unknot, torus knot or core loop companions");
    switch (q.kind) {
        case SatelliteKind::whitehead: return whitehead_bound(q.n, q.b1K);
        case SatelliteKind::cable: return cable_bound(q.q, q.b1K);
        case SatelliteKind::plain:
            if (q.omega < 1) throw PreconditionError("wrapping number must be at least 1");
            return (q.lensed ? q.b1K - Half(1) : q.b1K) * q.omega;
    }
    return Half(0);
}

Half omega_one_bound(Half bgL, bool lensed) {
    if (bgL < Half(0)) throw PreconditionError("bridge number is nonnegative");
    Half b = bgL - Half(lensed ? 1 : 0);
    return b < Half(0) ? Half(0) : b;
}

}  // namespace bridgecalc
