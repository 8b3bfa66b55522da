#include "bridgecalc/state.hpp"

#include <algorithm>

#include "bridgecalc/errors.hpp"

namespace bridgecalc {

std::string role_name(Role r) {
    switch (r) {
        case Role::thick: return "thick";
        case Role::thin: return "thin";
        case Role::boundary: return "manifold-boundary";
        case Role::vertex: return "vertex-sphere";
    }
    return "?";
}

Role role_from_name(const std::string& name) {
    if (name == "thick") return Role::thick;
    if (name == "thin") return Role::thin;
    if (name == "manifold-boundary") return Role::boundary;
    if (name == "vertex-sphere") return Role::vertex;
    throw SchemaError("unknown surface role '" + name + "'");
}

int Surface::weight() const {
    int w = 0;
    for (const auto& p : punctures) w += p.weight;
    return w;
}

bool Surface::has_puncture(const std::string& pid) const {
    return std::any_of(punctures.begin(), punctures.end(),
                       [&](const Puncture& p) { return p.id == pid; });
}

bool Vpc::has_negative(const std::string& sid) const {
    return std::find(negatives.begin(), negatives.end(), sid) != negatives.end();
}

const Surface* PairState::find_surface(const std::string& id) const {
    for (const auto& s : surfaces)
        if (s.id == id) return &s;
    return nullptr;
}

const Vpc* PairState::find_vpc(const std::string& id) const {
    for (const auto& v : vpcs)
        if (v.id == id) return &v;
    return nullptr;
}

Surface* PairState::find_surface(const std::string& id) {
    for (auto& s : surfaces)
        if (s.id == id) return &s;
    return nullptr;
}

Vpc* PairState::find_vpc(const std::string& id) {
    for (auto& v : vpcs)
        if (v.id == id) return &v;
    return nullptr;
}

const Surface& PairState::surface(const std::string& id) const {
    if (auto* s = find_surface(id)) return *s;
    throw std::out_of_range("no surface '" + id + "'");
}

const Vpc& PairState::vpc(const std::string& id) const {
    if (auto* v = find_vpc(id)) return *v;
    throw std::out_of_range("no VPC '" + id + "'");
}

std::vector<std::string> PairState::adjacent_vpcs(const std::string& sid) const {
    std::vector<std::string> out;
    for (const auto& v : vpcs) {
        if (v.positive == sid) out.push_back(v.id);
        for (const auto& n : v.negatives)
            if (n == sid) out.push_back(v.id);
    }
    return out;
}

std::string PairState::other_side(const std::string& sid, const std::string& vpcId) const {
    for (const auto& id : adjacent_vpcs(sid))
        if (id != vpcId) return id;
    throw std::out_of_range("surface '" + sid + "' has no VPC other than '" + vpcId + "'");
}

std::vector<const Surface*> PairState::with_role(Role r) const {
    std::vector<const Surface*> out;
    for (const auto& s : surfaces)
        if (s.role == r) out.push_back(&s);
    return out;
}

std::map<std::string, PunctureInfo> puncture_index(const PairState& s) {
    std::map<std::string, PunctureInfo> out;
    for (const auto& surf : s.surfaces)
        for (const auto& p : surf.punctures) out.emplace(p.id, PunctureInfo{surf.id, p.weight});
    return out;
}

std::vector<Arc> all_arcs(const Tangle& t) {
    std::vector<Arc> out(t.bridge);
    out.insert(out.end(), t.vertical.begin(), t.vertical.end());
    out.insert(out.end(), t.ghost.begin(), t.ghost.end());
    return out;
}

}  // namespace bridgecalc
