#include "bridgecalc/dual_graph.hpp"

#include <functional>
#include <map>

namespace bridgecalc {

std::vector<DualEdge> dual_edges(const PairState& s) {
    std::vector<DualEdge> out;
    for (const auto& surf : s.surfaces) {
        if (surf.role != Role::thick && surf.role != Role::thin) continue;
        auto adj = s.adjacent_vpcs(surf.id);
        if (adj.size() != 2 || adj[0] == adj[1]) continue;
        if (surf.direction == adj[0])
            out.push_back({surf.id, adj[1], adj[0]});
        else
            out.push_back({surf.id, adj[0], adj[1]});
    }
    return out;
}

bool dual_digraph_acyclic(const PairState& s) {
    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& v : s.vpcs) succ[v.id];
    for (const auto& e : dual_edges(s)) succ[e.tail].push_back(e.head);

    // 0 unvisited, 1 on stack, 2 done
    std::map<std::string, int> state;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
        state[v] = 1;
        for (const auto& w : succ[v]) {
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (const auto& [v, _] : succ)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

std::vector<std::set<std::string>> vpc_components(const PairState& s,
                                                  const std::set<std::string>& removed) {
    std::map<std::string, std::string> parent;
    for (const auto& v : s.vpcs) parent[v.id] = v.id;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : dual_edges(s)) {
        if (removed.count(e.surface)) continue;
        parent[find(e.tail)] = find(e.head);
    }
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& v : s.vpcs) groups[find(v.id)].insert(v.id);
    std::vector<std::set<std::string>> out;
    for (auto& [_, g] : groups) out.push_back(std::move(g));
    return out;
}

}  // namespace bridgecalc
