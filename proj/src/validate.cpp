#include "bridgecalc/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bridgecalc/dual_graph.hpp"

namespace bridgecalc {

namespace {

class Reporter {
public:
    void add(std::string code, std::string message) {
        report_.violations.push_back({std::move(code), std::move(message)});
    }
    ValidationReport take() { return std::move(report_); }

private:
    ValidationReport report_;
};

void check_ids(const PairState& s, Reporter& r) {
    std::set<std::string> seen;
    for (const auto& surf : s.surfaces) {
        if (!seen.insert(surf.id).second) r.add("duplicate-id", "surface id '" + surf.id + "' repeated");
        if (surf.genus < 0) r.add("bad-genus", "surface '" + surf.id + "' has negative genus");
    }
    seen.clear();
    for (const auto& v : s.vpcs)
        if (!seen.insert(v.id).second) r.add("duplicate-id", "VPC id '" + v.id + "' repeated");
    seen.clear();
    for (const auto& surf : s.surfaces)
        for (const auto& p : surf.punctures) {
            if (!seen.insert(p.id).second)
                r.add("duplicate-puncture", "puncture '" + p.id + "' appears more than once");
            if (p.weight < 1)
                r.add("bad-weight", "puncture '" + p.id + "' has weight " + std::to_string(p.weight));
        }
}

void check_adjacency(const PairState& s, Reporter& r) {
    std::map<std::string, int> asPositive, asNegative;
    for (const auto& v : s.vpcs) {
        const Surface* pos = s.find_surface(v.positive);
        if (!pos)
            r.add("unknown-surface", "VPC '" + v.id + "' positive boundary '" + v.positive + "' missing");
        else if (pos->role != Role::thick)
            r.add("positive-not-thick", "VPC '" + v.id + "' positive boundary '" + v.positive + "' is not thick");
        asPositive[v.positive]++;
        std::set<std::string> local{v.positive};
        for (const auto& n : v.negatives) {
            if (!local.insert(n).second)
                r.add("repeated-boundary", "VPC '" + v.id + "' lists '" + n + "' twice");
            const Surface* neg = s.find_surface(n);
            if (!neg)
                r.add("unknown-surface", "VPC '" + v.id + "' negative boundary '" + n + "' missing");
            else if (neg->role == Role::thick)
                r.add("negative-role", "VPC '" + v.id + "' has thick surface '" + n + "' as negative boundary");
            asNegative[n]++;
        }
    }
    for (const auto& surf : s.surfaces) {
        int p = asPositive[surf.id], n = asNegative[surf.id];
        bool good = false;
        switch (surf.role) {
            case Role::thick: good = p == 2 && n == 0; break;
            case Role::thin: good = p == 0 && n == 2; break;
            case Role::boundary:
            case Role::vertex: good = p == 0 && n == 1; break;
        }
        if (!good)
            r.add("adjacency", role_name(surf.role) + " surface '" + surf.id + "' bounds " +
                                   std::to_string(p) + " VPCs positively and " + std::to_string(n) +
                                   " negatively");
        if (surf.role == Role::vertex && (surf.genus != 0 || surf.punctures.size() < 3))
            r.add("vertex-degree", "vertex sphere '" + surf.id + "' must be a sphere with at least 3 punctures");
        if (surf.role == Role::thick || surf.role == Role::thin) {
            auto adj = s.adjacent_vpcs(surf.id);
            if (std::find(adj.begin(), adj.end(), surf.direction) == adj.end())
                r.add("direction", "surface '" + surf.id + "' points into '" + surf.direction +
                                       "', which it does not bound");
        }
    }
}

void check_tangle(const PairState& s, const Vpc& v, const std::map<std::string, PunctureInfo>& idx,
                  Reporter& r) {
    const Tangle& t = v.tangle;
    auto where = [&](const std::string& pid) -> const PunctureInfo* {
        auto it = idx.find(pid);
        return it == idx.end() ? nullptr : &it->second;
    };
    auto onPositive = [&](const PunctureInfo* p) { return p && p->surface == v.positive; };
    auto onNegative = [&](const PunctureInfo* p) { return p && v.has_negative(p->surface); };

    std::map<std::string, int> used;
    auto checkArc = [&](const Arc& a, const char* kind, bool firstPositive, bool secondPositive) {
        const PunctureInfo* x = where(a.first);
        const PunctureInfo* y = where(a.second);
        used[a.first]++;
        used[a.second]++;
        std::string label = std::string(kind) + " arc (" + a.first + "," + a.second + ") of VPC '" + v.id + "'";
        if (!x || !y) {
            r.add("unknown-puncture", label + " references a missing puncture");
            return;
        }
        if (a.first == a.second) r.add("arc-endpoint", label + " has equal endpoints");
        bool okX = firstPositive ? onPositive(x) : onNegative(x);
        bool okY = secondPositive ? onPositive(y) : onNegative(y);
        if (!okX || !okY) r.add("arc-endpoint", label + " has an endpoint on the wrong boundary");
        if (x->weight != y->weight) r.add("arc-weight", label + " joins punctures of different weight");
    };
    for (const auto& a : t.bridge) checkArc(a, "bridge", true, true);
    for (const auto& a : t.vertical) checkArc(a, "vertical", true, false);
    for (const auto& a : t.ghost) checkArc(a, "ghost", false, false);
    if (t.coreLoops < 0) r.add("bad-loops", "VPC '" + v.id + "' has a negative core loop count");

    std::vector<std::string> boundary{v.positive};
    boundary.insert(boundary.end(), v.negatives.begin(), v.negatives.end());
    std::set<std::string> mine;
    for (const auto& sid : boundary) {
        const Surface* surf = s.find_surface(sid);
        if (!surf) continue;
        for (const auto& p : surf->punctures) {
            mine.insert(p.id);
            if (used[p.id] != 1)
                r.add("puncture-usage", "puncture '" + p.id + "' is used by " + std::to_string(used[p.id]) +
                                            " arc ends in VPC '" + v.id + "'");
        }
    }
    for (const auto& [pid, count] : used)
        if (!mine.count(pid) && where(pid))
            r.add("puncture-usage", "VPC '" + v.id + "' uses puncture '" + pid + "' from a surface it does not bound");
}

void check_compressionbody(const PairState& s, const Vpc& v, const std::map<std::string, PunctureInfo>& idx,
                           Reporter& r) {
    const Surface* pos = s.find_surface(v.positive);
    if (!pos) return;
    int gMinus = 0;
    bool allSpheres = true;
    for (const auto& n : v.negatives) {
        const Surface* neg = s.find_surface(n);
        if (!neg) return;
        gMinus += neg->genus;
        allSpheres = allSpheres && neg->genus == 0;
    }
    if (pos->genus < gMinus)
        r.add("genus-excess", "VPC '" + v.id + "' has negative boundary genus exceeding its positive boundary");
    if (pos->genus == 0 && !allSpheres)
        r.add("sphere-negatives", "VPC '" + v.id + "' has a spherical positive boundary but a non-spherical negative one");

    // Ghost arc graph on the negative boundary components.
    std::map<std::string, std::string> parent;
    for (const auto& n : v.negatives) parent[n] = n;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int edges = 0, cycles = 0;
    for (const auto& a : v.tangle.ghost) {
        auto x = idx.find(a.first), y = idx.find(a.second);
        if (x == idx.end() || y == idx.end()) continue;
        if (!parent.count(x->second.surface) || !parent.count(y->second.surface)) continue;
        ++edges;
        auto rx = find(x->second.surface), ry = find(y->second.surface);
        if (rx == ry)
            ++cycles;
        else
            parent[rx] = ry;
    }
    if (cycles > 0 && (pos->genus == 0 || pos->genus == gMinus))
        r.add("ghost-cycle", "VPC '" + v.id + "' has a cycle in its ghost arc graph");

    // Ghost arcs and core loops each use up a handle of the compressionbody.
    int k = static_cast<int>(v.negatives.size());
    int handles = k == 0 ? pos->genus : pos->genus - gMinus + k - 1;
    if (edges + v.tangle.coreLoops > handles)
        r.add("ghost-rank", "VPC '" + v.id + "' has " + std::to_string(edges) + " ghost arcs and " +
                                std::to_string(v.tangle.coreLoops) + " core loops but only " +
                                std::to_string(handles) + " handles");
}

void check_orientation(const PairState& s, Reporter& r) {
    for (const auto& v : s.vpcs) {
        const Surface* pos = s.find_surface(v.positive);
        if (!pos) continue;
        bool thickIn = pos->direction == v.id;
        for (const auto& n : v.negatives) {
            const Surface* neg = s.find_surface(n);
            if (!neg || neg->role != Role::thin) continue;
            bool thinOut = neg->direction != v.id;
            if (thinOut != thickIn)
                r.add("orientation", "VPC '" + v.id + "': thin surface '" + n + "' and thick surface '" +
                                         v.positive + "' are inconsistently oriented");
        }
    }
}

}  // namespace

ValidationReport validate_state(const PairState& s) {
    Reporter r;
    check_ids(s, r);
    check_adjacency(s, r);
    auto idx = puncture_index(s);
    for (const auto& v : s.vpcs) {
        check_tangle(s, v, idx, r);
        check_compressionbody(s, v, idx, r);
    }
    check_orientation(s, r);
    if (!dual_digraph_acyclic(s)) r.add("not-acyclic", "the dual digraph has a directed cycle");
    if (s.vpcs.empty())
        r.add("empty", "a state needs at least one VPC");
    else if (vpc_components(s).size() != 1)
        r.add("disconnected", "the VPCs do not form a connected graph");
    return r.take();
}

void require_valid(const PairState& s) {
    auto report = validate_state(s);
    if (!report.ok()) throw InvalidState(std::move(report));
}

}  // namespace bridgecalc
