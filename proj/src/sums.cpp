#include "bridgecalc/sums.hpp"

#include <algorithm>
#include <set>

#include "bridgecalc/dual_graph.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/invariants.hpp"
#include "bridgecalc/validate.hpp"
#include "strands.hpp"

namespace bridgecalc {

std::string sum_kind_name(SumKind k) {
    switch (k) {
        case SumKind::distant: return "distant";
        case SumKind::connected: return "connected";
        case SumKind::cut_edge: return "cut-edge";
        case SumKind::trivalent: return "trivalent";
    }
    return "?";
}

SumKind sum_kind_from_name(const std::string& name) {
    if (name == "distant") return SumKind::distant;
    if (name == "connected") return SumKind::connected;
    if (name == "cut-edge") return SumKind::cut_edge;
    if (name == "trivalent") return SumKind::trivalent;
    throw SchemaError("unknown sum kind '" + name + "'");
}

namespace {

PairState prefixed(const PairState& s, const std::string& p) {
    PairState out = s;
    auto ren = [&](std::string& id) {
        if (!id.empty()) id = p + id;
    };
    for (auto& surf : out.surfaces) {
        ren(surf.id);
        ren(surf.direction);
        for (auto& q : surf.punctures) ren(q.id);
    }
    for (auto& v : out.vpcs) {
        ren(v.id);
        ren(v.positive);
        for (auto& n : v.negatives) ren(n);
        for (auto* list : {&v.tangle.bridge, &v.tangle.vertical, &v.tangle.ghost})
            for (auto& a : *list) {
                ren(a.first);
                ren(a.second);
            }
    }
    return out;
}

void retangle(Vpc& v, const std::vector<Arc>& arcs, const std::map<std::string, PunctureInfo>& idx) {
    v.tangle.bridge.clear();
    v.tangle.vertical.clear();
    v.tangle.ghost.clear();
    for (const auto& a : arcs) detail::place_arc(v, a.first, a.second, idx);
}

bool same_arc(const Arc& a, const Arc& b) { return a == b || (a.first == b.second && a.second == b.first); }

struct Site {
    std::string vpc;
    std::optional<Arc> arc;
    std::string point;  // cut-edge or trivalent attachment surface
};

std::vector<Site> sites(const PairState& f, const SumSpec& spec, const std::string& vpcGiven,
                        const std::optional<Arc>& arcGiven, bool loop, const std::string& pointGiven) {
    std::vector<Site> out;
    auto idx = puncture_index(f);
    for (const auto& v : f.vpcs) {
        if (!vpcGiven.empty() && v.id != vpcGiven) continue;
        switch (spec.kind) {
            case SumKind::distant: out.push_back({v.id, {}, {}}); break;
            case SumKind::connected:
                if (loop) {
                    if (v.tangle.coreLoops > 0) out.push_back({v.id, {}, {}});
                    break;
                }
                for (const auto& a : all_arcs(v.tangle)) {
                    bool match = arcGiven ? same_arc(a, *arcGiven) : idx.at(a.first).weight == spec.u;
                    if (match) {
                        out.push_back({v.id, a, {}});
                        break;
                    }
                }
                break;
            case SumKind::cut_edge:
            case SumKind::trivalent: {
                Role want = spec.kind == SumKind::cut_edge ? Role::boundary : Role::vertex;
                std::size_t count = spec.kind == SumKind::cut_edge ? 1 : 3;
                for (const auto& n : v.negatives) {
                    const Surface& surf = f.surface(n);
                    if (surf.role != want || surf.punctures.size() != count) continue;
                    if (!pointGiven.empty() && n != pointGiven) continue;
                    out.push_back({v.id, {}, n});
                }
                break;
            }
        }
    }
    return out;
}

bool thick_points_in(const PairState& f, const std::string& vpcId) {
    const Vpc& v = f.vpc(vpcId);
    return f.surface(v.positive).direction == vpcId;
}

// Rewrites the factor's site so that it ends on the summing sphere; returns the VPC's new arc list.
std::vector<Arc> attach(PairState& f, const Site& site, const SumSpec& spec, const Surface& sphere, bool loop) {
    Vpc& v = *f.find_vpc(site.vpc);
    std::vector<Arc> arcs = all_arcs(v.tangle);
    if (spec.kind == SumKind::connected) {
        const std::string& s1 = sphere.punctures[0].id;
        const std::string& s2 = sphere.punctures[1].id;
        if (loop) {
            --v.tangle.coreLoops;
            arcs.push_back({s1, s2});
        } else {
            auto it = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return same_arc(a, *site.arc); });
            Arc cut = *it;
            arcs.erase(it);
            arcs.push_back({cut.first, s1});
            arcs.push_back({s2, cut.second});
        }
    } else if (!site.point.empty()) {
        const Surface& point = f.surface(site.point);
        std::map<std::string, std::string> to;
        for (std::size_t i = 0; i < point.punctures.size(); ++i) to[point.punctures[i].id] = sphere.punctures[i].id;
        for (auto& a : arcs) {
            if (to.count(a.first)) a.first = to[a.first];
            if (to.count(a.second)) a.second = to[a.second];
        }
        v.negatives.erase(std::find(v.negatives.begin(), v.negatives.end(), site.point));
        f.surfaces.erase(std::find_if(f.surfaces.begin(), f.surfaces.end(),
                                      [&](const Surface& x) { return x.id == site.point; }));
    }
    f.find_vpc(site.vpc)->negatives.push_back(sphere.id);
    return arcs;
}

}  // namespace

PairState compose(const PairState& a, const PairState& b, const SumSpec& spec) {
    require_valid(a);
    require_valid(b);
    if (spec.u < 1) throw PreconditionError("sum weight must be at least 1");
    PairState fa = prefixed(a, "a/");
    PairState fb = prefixed(b, "b/");
    if (spec.flipB)
        for (auto& surf : fb.surfaces)
            if (surf.role == Role::thick || surf.role == Role::thin) surf.direction = fb.other_side(surf.id, surf.direction);

    auto pfx = [](const std::string& p, const std::string& id) { return id.empty() ? id : p + id; };
    auto pfxArc = [&](const std::string& p, const std::optional<Arc>& arc) -> std::optional<Arc> {
        if (!arc) return arc;
        return Arc{pfx(p, arc->first), pfx(p, arc->second)};
    };
    auto sa = sites(fa, spec, pfx("a/", spec.vpcA), pfxArc("a/", spec.arcA), spec.loopA, pfx("a/", spec.pointA));
    auto sb = sites(fb, spec, pfx("b/", spec.vpcB), pfxArc("b/", spec.arcB), spec.loopB, pfx("b/", spec.pointB));
    if (sa.empty() || sb.empty()) throw PreconditionError("no place to attach the summing sphere in one of the factors");
    Site siteA = sa.front();
    bool inA = thick_points_in(fa, siteA.vpc);
    auto compatible = std::find_if(sb.begin(), sb.end(), [&](const Site& x) { return thick_points_in(fb, x.vpc) != inA; });
    if (compatible == sb.end())
        throw PreconditionError("the summing sphere cannot be oriented consistently; reverse the second factor");
    Site siteB = *compatible;

    Surface sphere;
    sphere.id = spec.sphereId;
    sphere.role = Role::thin;
    sphere.direction = inA ? siteB.vpc : siteA.vpc;
    auto idxA = puncture_index(fa);
    auto idxB = puncture_index(fb);
    auto name = [&](int i) { return spec.sphereId + "." + std::to_string(i); };
    switch (spec.kind) {
        case SumKind::distant: break;
        case SumKind::connected:
            for (const auto& [site, idx, loop] : {std::tuple{siteA, &idxA, spec.loopA}, std::tuple{siteB, &idxB, spec.loopB}})
                if (!loop && idx->at(site.arc->first).weight != spec.u)
                    throw PreconditionError("joined edges must both have weight " + std::to_string(spec.u));
            sphere.punctures = {{name(1), spec.u}, {name(2), spec.u}};
            break;
        case SumKind::cut_edge:
        case SumKind::trivalent: {
            const auto& pa = fa.surface(siteA.point).punctures;
            const auto& pb = fb.surface(siteB.point).punctures;
            for (std::size_t i = 0; i < pa.size(); ++i) {
                if (pa[i].weight != pb[i].weight) throw PreconditionError("joined edges have different weights");
                if (spec.kind == SumKind::cut_edge && pa[i].weight != 1)
                    throw PreconditionError("a cut-edge sum needs an edge of weight 1");
                sphere.punctures.push_back({name(static_cast<int>(i) + 1), pa[i].weight});
            }
            break;
        }
    }
    if (fa.find_surface(sphere.id) || fb.find_surface(sphere.id))
        throw PreconditionError("summing sphere id '" + sphere.id + "' is already in use");

    auto arcsA = attach(fa, siteA, spec, sphere, spec.loopA);
    auto arcsB = attach(fb, siteB, spec, sphere, spec.loopB);
    PairState out;
    out.flags.everySphereSeparates = a.flags.everySphereSeparates && b.flags.everySphereSeparates;
    out.flags.irreducible = a.flags.irreducible && b.flags.irreducible;
    out.surfaces = fa.surfaces;
    out.surfaces.insert(out.surfaces.end(), fb.surfaces.begin(), fb.surfaces.end());
    out.surfaces.push_back(sphere);
    out.vpcs = fa.vpcs;
    out.vpcs.insert(out.vpcs.end(), fb.vpcs.begin(), fb.vpcs.end());
    auto idx = puncture_index(out);
    retangle(*out.find_vpc(siteA.vpc), arcsA, idx);
    retangle(*out.find_vpc(siteB.vpc), arcsB, idx);

    auto report = validate_state(out);
    if (!report.ok()) throw PreconditionError("composite is not well formed: " + report.summary());
    auto ia = raw_invariants(a), ib = raw_invariants(b), io = raw_invariants(out);
    if (io.netg != ia.netg + ib.netg || io.netw != ia.netw + ib.netw - Half(sphere.weight()))
        throw IdentityFailure("composite net genus or net weight is not additive");
    return out;
}

std::pair<PairState, PairState> decompose(const PairState& s, const std::string& sphereId) {
    const Surface* sp = s.find_surface(sphereId);
    if (!sp || sp->role != Role::thin || sp->genus != 0)
        throw PreconditionError("'" + sphereId + "' is not a thin sphere");
    if (sp->punctures.size() > 3) throw PreconditionError("a summing sphere has at most three punctures");
    if (!s.flags.everySphereSeparates) throw PreconditionError("splitting needs every sphere to separate");
    auto parts = vpc_components(s, {sphereId});
    if (parts.size() != 2) throw PreconditionError("'" + sphereId + "' does not separate");
    std::string head = sp->direction;
    std::string tail = s.other_side(sphereId, head);

    auto factor = [&](const std::string& x) {
        const auto& comp = parts[0].count(x) ? parts[0] : parts[1];
        PairState f;
        f.flags = s.flags;
        for (const auto& surf : s.surfaces) {
            if (surf.id == sphereId) continue;
            auto adj = s.adjacent_vpcs(surf.id);
            if (!adj.empty() && comp.count(adj.front())) f.surfaces.push_back(surf);
        }
        for (const auto& v : s.vpcs)
            if (comp.count(v.id)) f.vpcs.push_back(v);
        Vpc& cap = *f.find_vpc(x);
        Surface capped = *sp;
        capped.direction.clear();
        switch (sp->punctures.size()) {
            case 0: cap.negatives.erase(std::find(cap.negatives.begin(), cap.negatives.end(), sphereId)); break;
            case 1:
                capped.role = Role::boundary;
                f.surfaces.push_back(capped);
                break;
            case 2: {
                cap.negatives.erase(std::find(cap.negatives.begin(), cap.negatives.end(), sphereId));
                const auto& p1 = sp->punctures[0].id;
                const auto& p2 = sp->punctures[1].id;
                auto arcsIn = detail::side_arcs(cap.tangle, 0);
                arcsIn.push_back({p1, p2, 0});  // the arc inside the capping ball
                auto strands = detail::glue_strands(arcsIn, {p1, p2});
                auto idx = puncture_index(f);
                std::vector<Arc> arcs;
                for (const auto& st : strands) {
                    if (st.closed)
                        ++cap.tangle.coreLoops;
                    else
                        arcs.push_back({st.nodes.front(), st.nodes.back()});
                }
                retangle(cap, arcs, idx);
                break;
            }
            default:
                capped.role = Role::vertex;
                f.surfaces.push_back(capped);
                break;
        }
        return f;
    };
    return {factor(tail), factor(head)};
}

Half additivity_bound(Half ba, Half bb, int u, int g, bool aCoreLoop, bool bCoreLoop) {
    if (g != 0 && g != 1) throw PreconditionError("the additivity bound covers genus 0 and 1 only");
    if (u < 1) throw PreconditionError("sum weight must be at least 1");
    if (ba < Half(0) || bb < Half(0)) throw PreconditionError("bridge numbers are nonnegative");
    if (g == 1 && ((aCoreLoop && ba != Half(0)) || (bCoreLoop && bb != Half(0))))
        throw PreconditionError("a core loop has genus-1 bridge number 0");
    return ba + bb - Half(u);
}

bool achieves_additivity_bound(const PairState& composite, Half bound) {
    return raw_invariants(composite).netw == bound * 2;
}

CutEdgeResult cut_edge_reduce(const PairState& s) {
    CutEdgeResult out{s, 0};
    PairState& t = out.state;
    while (true) {
        const Surface* cut = nullptr;
        for (const auto& surf : t.surfaces)
            if (surf.role == Role::thin && surf.genus == 0 && surf.punctures.size() == 1 &&
                (!cut || surf.id < cut->id))
                cut = &surf;
        if (!cut) break;
        std::string start = cut->punctures[0].id;

        std::vector<detail::SideArc> arcs;
        std::set<std::string> internal;
        for (std::size_t i = 0; i < t.vpcs.size(); ++i) {
            auto more = detail::side_arcs(t.vpcs[i].tangle, static_cast<int>(i));
            arcs.insert(arcs.end(), more.begin(), more.end());
        }
        for (const auto& surf : t.surfaces)
            if (surf.role == Role::thick || surf.role == Role::thin)
                for (const auto& p : surf.punctures) internal.insert(p.id);
        auto strands = detail::glue_strands(arcs, internal);
        auto edge = std::find_if(strands.begin(), strands.end(), [&](const detail::Strand& st) {
            return std::find(st.nodes.begin(), st.nodes.end(), start) != st.nodes.end();
        });
        if (edge == strands.end() || edge->closed) throw IdentityFailure("cut edge is not an open strand");

        std::set<std::string> gone(edge->nodes.begin(), edge->nodes.end());
        for (std::size_t i = 0; i < edge->sides.size(); ++i) {
            Arc a{edge->nodes[i], edge->nodes[i + 1]};
            Tangle& tg = t.vpcs[edge->sides[i]].tangle;
            for (auto* list : {&tg.bridge, &tg.vertical, &tg.ghost})
                list->erase(std::remove_if(list->begin(), list->end(), [&](const Arc& x) { return same_arc(x, a); }),
                            list->end());
        }
        std::vector<std::string> ends;
        for (auto& surf : t.surfaces) {
            auto before = surf.punctures.size();
            surf.punctures.erase(std::remove_if(surf.punctures.begin(), surf.punctures.end(),
                                                [&](const Puncture& p) { return gone.count(p.id); }),
                                 surf.punctures.end());
            if (surf.role == Role::vertex && surf.punctures.size() != before) ends.push_back(surf.id);
        }
        for (const auto& vid : ends) {
            Surface& v = *t.find_surface(vid);
            std::string owner = t.adjacent_vpcs(vid).front();
            Vpc& x = *t.find_vpc(owner);
            if (v.punctures.size() == 1) {
                v.role = Role::boundary;
            } else if (v.punctures.size() <= 2) {
                std::set<std::string> inner;
                for (const auto& p : v.punctures) inner.insert(p.id);
                auto arcsIn = detail::side_arcs(x.tangle, 0);
                if (v.punctures.size() == 2) arcsIn.push_back({v.punctures[0].id, v.punctures[1].id, 0});
                x.negatives.erase(std::find(x.negatives.begin(), x.negatives.end(), vid));
                t.surfaces.erase(std::find_if(t.surfaces.begin(), t.surfaces.end(),
                                              [&](const Surface& q) { return q.id == vid; }));
                auto glued = detail::glue_strands(arcsIn, inner);
                std::vector<Arc> kept;
                for (const auto& st : glued) {
                    if (st.closed)
                        ++x.tangle.coreLoops;
                    else
                        kept.push_back({st.nodes.front(), st.nodes.back()});
                }
                retangle(x, kept, puncture_index(t));
            }
        }
        ++out.count;
    }
    return out;
}

}  // namespace bridgecalc
