#include "bridgecalc/invariants.hpp"

#include <algorithm>

#include "bridgecalc/dual_graph.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/validate.hpp"

namespace bridgecalc {

Half surface_x_m(int chi, int weight, int m) { return Half::from_twice(-m * chi + weight); }

Half surface_x_m(const Surface& s, int m) { return surface_x_m(s.chi(), s.weight(), m); }

InvariantBundle raw_invariants(const PairState& s, const std::vector<int>& ms) {
    InvariantBundle b;
    int gPlus = 0, gMinus = 0, nPlus = 0, nMinus = 0;
    for (const auto& surf : s.surfaces) {
        int sign = 0;
        if (surf.role == Role::thick) {
            sign = 1;
            gPlus += surf.genus;
            ++nPlus;
        } else if (surf.role == Role::thin) {
            sign = -1;
            gMinus += surf.genus;
            ++nMinus;
        } else {
            continue;
        }
        b.netchi -= Half(sign * surf.chi());
        b.netw += Half(sign * surf.weight());
        b.netx += surface_x_m(surf, 1) * sign;
        for (int m : ms) b.netx_m[m] += surface_x_m(surf, m) * sign;
    }
    b.netg = Half(gPlus - gMinus + nMinus - nPlus + 1);
    return b;
}

InvariantBundle net_invariants(const PairState& s, const std::vector<int>& ms) {
    require_valid(s);
    InvariantBundle b = raw_invariants(s, ms);
    for (const auto& [m, x] : b.netx_m)
        if (x * 2 != b.netchi * m + b.netw)
            throw IdentityFailure("2 netx_" + std::to_string(m) + " != m netchi + netw");
    if (b.netchi != (b.netg - Half(1)) * 2) throw IdentityFailure("netchi != 2 (netg - 1)");
    return b;
}

PairState unweighted(const PairState& s) {
    PairState out = s;
    for (auto& surf : out.surfaces)
        for (auto& p : surf.punctures) p.weight = 1;
    return out;
}

VertexSet unit_vertices(const PairState& s) {
    auto idx = puncture_index(s);
    VertexSet out;
    for (const auto& surf : s.surfaces) {
        if (surf.role != Role::vertex) continue;
        bool unit = std::all_of(surf.punctures.begin(), surf.punctures.end(),
                                [](const Puncture& p) { return p.weight == 1; });
        if (unit) out.insert(surf.id);
    }
    // An arc weight is read from its first endpoint, so check the far ends too.
    for (const auto& v : s.vpcs)
        for (const auto& a : all_arcs(v.tangle)) {
            auto x = idx.find(a.first), y = idx.find(a.second);
            if (x == idx.end() || y == idx.end()) continue;
            if (x->second.weight != 1) {
                out.erase(x->second.surface);
                out.erase(y->second.surface);
            }
        }
    return out;
}

std::vector<VertexSet> admissible_vertex_sets(const PairState& s, std::size_t limit) {
    VertexSet units = unit_vertices(s);
    std::vector<std::string> unit(units.begin(), units.end());
    std::vector<VertexSet> out{{}};
    for (const auto& v : unit) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n && out.size() < limit; ++i) {
            auto next = out[i];
            next.insert(v);
            out.push_back(std::move(next));
        }
    }
    return out;
}

Half delta_m(const PairState& s, const std::string& vpcId, int m, const VertexSet& U) {
    const Vpc& v = s.vpc(vpcId);
    auto idx = puncture_index(s);
    std::map<std::string, int> localWeight;
    std::map<std::string, bool> unitOnly;
    for (const auto& a : all_arcs(v.tangle)) {
        auto x = idx.find(a.first), y = idx.find(a.second);
        if (x == idx.end() || y == idx.end())
            throw PreconditionError("arc (" + a.first + "," + a.second + ") references a missing puncture");
        int w = x->second.weight;
        for (const auto* end : {&x->second, &y->second}) {
            localWeight[end->surface] += w;
            unitOnly.try_emplace(end->surface, true);
            if (w != 1) unitOnly[end->surface] = false;
        }
    }
    for (const auto& u : U) {
        const Surface* surf = s.find_surface(u);
        if (!surf || surf->role != Role::vertex)
            throw PreconditionError("'" + u + "' in U is not a vertex sphere");
        if (!v.has_negative(u)) continue;
        if (unitOnly.count(u) && !unitOnly[u])
            throw PreconditionError("vertex sphere '" + u + "' in U meets an arc of weight above 1");
    }

    const Surface& pos = s.surface(v.positive);
    Half d = surface_x_m(pos.chi(), localWeight[pos.id], m);
    for (const auto& n : v.negatives) {
        const Surface& neg = s.surface(n);
        if (U.count(n))
            d -= surface_x_m(neg.chi(), localWeight[n], 1);
        else
            d -= surface_x_m(neg.chi(), localWeight[n], m);
    }
    return d;
}

Half counting_identity_residual(const PairState& s, int m, const VertexSet& U) {
    for (const auto& u : U) {
        const Surface* surf = s.find_surface(u);
        if (!surf || surf->role != Role::vertex)
            throw PreconditionError("'" + u + "' in U is not a vertex sphere");
    }
    Half r = raw_invariants(s, {m}).netx_m.at(m) * 2;
    for (const auto& surf : s.surfaces) {
        if (surf.role == Role::boundary)
            r -= surface_x_m(surf, m);
        else if (surf.role == Role::vertex)
            r -= surface_x_m(surf, U.count(surf.id) ? 1 : m);
    }
    for (const auto& v : s.vpcs) r -= delta_m(s, v.id, m, U);
    return r;
}

int max_weight(const PairState& s) {
    int mu = 0;
    for (const auto& surf : s.surfaces)
        for (const auto& p : surf.punctures) mu = std::max(mu, p.weight);
    return mu;
}

LowerBound lower_bound_check(const PairState& s) {
    InvariantBundle b = net_invariants(s, {});
    int mu = max_weight(s);
    int chiB = 0, wB = 0;
    for (const auto& surf : s.surfaces)
        if (surf.role == Role::boundary || surf.role == Role::vertex) {
            chiB += surf.chi();
            wB += surf.weight();
        }
    LowerBound lb;
    lb.bound = -(b.netg * 2 - Half(2)) * mu - Half::from_twice(mu * chiB) - Half::from_twice(wB);
    lb.netw = b.netw;
    lb.satisfied = lb.netw >= lb.bound;
    return lb;
}

std::vector<std::string> negative_delta_lint(const PairState& s, int m, const VertexSet& U) {
    std::vector<std::string> out;
    for (const auto& v : s.vpcs) {
        if (delta_m(s, v.id, m, U) >= Half(0)) continue;
        bool ok = s.surface(v.positive).genus == 0;
        for (const auto& n : v.negatives)
            if (s.surface(n).role == Role::vertex && !U.count(n)) ok = false;
        if (!ok) out.push_back(v.id);
    }
    return out;
}

bool lens_shape_check(const PairState& s) {
    if (!s.with_role(Role::boundary).empty())
        throw PreconditionError("lens shape check needs a closed manifold");
    Half g = raw_invariants(s, {}).netg;
    if (g != Half(0) && g != Half(1))
        throw PreconditionError("lens shape check needs net genus 0 or 1, got " + g.str());

    for (const auto& surf : s.surfaces)
        if ((surf.role == Role::thick || surf.role == Role::thin) && surf.genus > 1) return false;
    auto edges = dual_edges(s);
    if (edges.size() + 1 != s.vpcs.size() || vpc_components(s).size() != 1) return false;

    for (const auto& e : edges) {
        if (s.surface(e.surface).genus != 0) continue;
        auto parts = vpc_components(s, {e.surface});
        int sidesWithTorus = 0;
        for (const auto& part : parts) {
            bool torus = false;
            for (const auto& f : edges)
                if (f.surface != e.surface && part.count(f.tail) && s.surface(f.surface).genus == 1) torus = true;
            sidesWithTorus += torus;
        }
        if (sidesWithTorus > 1) return false;
    }
    return true;
}

}  // namespace bridgecalc
