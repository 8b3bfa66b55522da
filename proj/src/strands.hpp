#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bridgecalc/errors.hpp"
#include "bridgecalc/state.hpp"

namespace bridgecalc::detail {

struct SideArc {
    std::string a, b;
    int side = 0;
};

// A maximal chain of arcs joined at internal punctures. For an open strand
// nodes.size() == sides.size() + 1; for a closed one node i sits between arc i-1 and arc i.
struct Strand {
    std::vector<std::string> nodes;
    std::vector<int> sides;
    bool closed = false;
};

inline std::vector<Strand> glue_strands(const std::vector<SideArc>& arcs, const std::set<std::string>& internal) {
    std::map<std::string, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        incident[arcs[i].a].push_back(i);
        incident[arcs[i].b].push_back(i);
    }
    for (const auto& [pid, list] : incident) {
        std::size_t want = internal.count(pid) ? 2 : 1;
        if (list.size() != want)
            throw MoveRejected("puncture '" + pid + "' meets " + std::to_string(list.size()) +
                               " arcs where " + std::to_string(want) + " are needed");
    }
    std::vector<bool> used(arcs.size(), false);
    auto walk = [&](std::string node, std::size_t arc, Strand& st) {
        while (true) {
            used[arc] = true;
            st.sides.push_back(arcs[arc].side);
            std::string next = arcs[arc].a == node ? arcs[arc].b : arcs[arc].a;
            if (!internal.count(next)) {
                st.nodes.push_back(next);
                return;
            }
            const auto& list = incident[next];
            std::size_t other = list[0] == arc ? list[1] : list[0];
            if (used[other]) {
                st.closed = true;
                return;
            }
            st.nodes.push_back(next);
            node = next;
            arc = other;
        }
    };

    std::vector<Strand> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (used[i]) continue;
        for (const auto& end : {arcs[i].a, arcs[i].b}) {
            if (internal.count(end) || used[i]) continue;
            Strand st;
            st.nodes.push_back(end);
            walk(end, i, st);
            out.push_back(std::move(st));
        }
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (used[i]) continue;
        Strand st;
        st.nodes.push_back(arcs[i].a);
        walk(arcs[i].a, i, st);
        out.push_back(std::move(st));
    }
    return out;
}

// Places an arc with the given endpoints into the tangle of `v` by where the endpoints lie.
inline void place_arc(Vpc& v, const std::string& x, const std::string& y,
                      const std::map<std::string, PunctureInfo>& idx) {
    auto side = [&](const std::string& pid) {
        auto it = idx.find(pid);
        if (it == idx.end()) throw MoveRejected("arc end '" + pid + "' is on no surface");
        if (it->second.surface == v.positive) return 1;
        if (v.has_negative(it->second.surface)) return 0;
        throw MoveRejected("arc end '" + pid + "' is not on the boundary of VPC '" + v.id + "'");
    };
    int sx = side(x), sy = side(y);
    if (sx && sy)
        v.tangle.bridge.push_back({x, y});
    else if (sx)
        v.tangle.vertical.push_back({x, y});
    else if (sy)
        v.tangle.vertical.push_back({y, x});
    else
        v.tangle.ghost.push_back({x, y});
}

inline std::vector<SideArc> side_arcs(const Tangle& t, int side) {
    std::vector<SideArc> out;
    for (const auto& a : all_arcs(t)) out.push_back({a.first, a.second, side});
    return out;
}

}  // namespace bridgecalc::detail
