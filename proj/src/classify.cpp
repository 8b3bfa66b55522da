#include "bridgecalc/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace bridgecalc {

std::string kind_name(VpcKind k) {
    switch (k) {
        case VpcKind::trivial_ball: return "trivial-ball";
        case VpcKind::product: return "product";
        case VpcKind::punctured_product: return "punctured-product";
        case VpcKind::punctured_trivial_ball: return "punctured-trivial-ball";
        case VpcKind::general: return "general";
    }
    return "?";
}

namespace {

// Follows strands of a VPC's tangle through twice-punctured spheres.
class StrandWalker {
public:
    StrandWalker(const PairState& s, const Vpc& v) : s_(s), v_(v), idx_(puncture_index(s)) {
        for (const auto& a : all_arcs(v.tangle)) {
            partner_[a.first] = a.second;
            partner_[a.second] = a.first;
            ++arcs_;
        }
    }

    int arc_count() const { return arcs_; }
    const std::string& surface_of(const std::string& pid) const { return idx_.at(pid).surface; }

    // Walks from `start` until reaching a surface outside `through`. Returns the end puncture
    // or nothing if the strand breaks, changes weight, or revisits a sphere.
    std::optional<std::string> walk(const std::string& start, const std::set<std::string>& through,
                                    int& arcsUsed) const {
        std::string cur = start;
        int weight = idx_.at(start).weight;
        std::set<std::string> seen;
        while (true) {
            auto it = partner_.find(cur);
            if (it == partner_.end()) return std::nullopt;
            std::string next = it->second;
            ++arcsUsed;
            const auto& info = idx_.at(next);
            if (info.weight != weight) return std::nullopt;
            if (!through.count(info.surface)) return next;
            if (!seen.insert(info.surface).second) return std::nullopt;
            const Surface& sphere = s_.surface(info.surface);
            const std::string& other =
                sphere.punctures[0].id == next ? sphere.punctures[1].id : sphere.punctures[0].id;
            if (idx_.at(other).weight != weight) return std::nullopt;
            cur = other;
        }
    }

private:
    const PairState& s_;
    const Vpc& v_;
    std::map<std::string, PunctureInfo> idx_;
    std::map<std::string, std::string> partner_;
    int arcs_ = 0;
};

bool is_filler_sphere(const Surface& s) {
    return s.role != Role::vertex && s.genus == 0 && (s.punctures.empty() || s.punctures.size() == 2);
}

// Partner check for product and punctured product. Returns the kind or nothing.
std::optional<VpcKind> product_with(const PairState& s, const Vpc& v, const StrandWalker& walker,
                                    const std::string& partner) {
    const Surface& pos = s.surface(v.positive);
    const Surface* f = s.find_surface(partner);
    if (!f || !v.has_negative(partner) || f->role == Role::vertex || f->genus != pos.genus)
        return std::nullopt;
    if (!v.tangle.bridge.empty() || v.tangle.coreLoops != 0) return std::nullopt;
    std::set<std::string> through;
    for (const auto& n : v.negatives) {
        if (n == partner) continue;
        const Surface& other = s.surface(n);
        if (!is_filler_sphere(other)) return std::nullopt;
        if (!other.punctures.empty()) through.insert(n);
    }
    int used = 0;
    for (const auto& p : pos.punctures) {
        auto end = walker.walk(p.id, through, used);
        if (!end || walker.surface_of(*end) != partner) return std::nullopt;
    }
    if (used != walker.arc_count()) return std::nullopt;
    return v.negatives.size() == 1 ? VpcKind::product : VpcKind::punctured_product;
}

bool is_trivial_ball(const PairState& s, const Vpc& v) {
    const Surface& pos = s.surface(v.positive);
    const Tangle& t = v.tangle;
    if (pos.genus != 0 || t.coreLoops != 0 || !t.ghost.empty()) return false;
    if (v.negatives.empty()) return t.vertical.empty() && t.bridge.size() <= 1;
    if (v.negatives.size() != 1) return false;
    return s.surface(v.negatives[0]).role == Role::vertex && t.bridge.empty();
}

bool is_punctured_trivial_ball(const PairState& s, const Vpc& v, const StrandWalker& walker) {
    const Surface& pos = s.surface(v.positive);
    if (pos.genus != 0 || v.tangle.coreLoops != 0) return false;
    std::string vertex;
    std::set<std::string> through;
    int fillers = 0;
    for (const auto& n : v.negatives) {
        const Surface& neg = s.surface(n);
        if (neg.role == Role::vertex) {
            if (!vertex.empty()) return false;
            vertex = n;
        } else if (is_filler_sphere(neg)) {
            ++fillers;
            if (!neg.punctures.empty()) through.insert(n);
        } else {
            return false;
        }
    }
    if (fillers == 0) return false;
    int used = 0;
    if (!vertex.empty()) {
        for (const auto& p : pos.punctures) {
            auto end = walker.walk(p.id, through, used);
            if (!end || walker.surface_of(*end) != vertex) return false;
        }
    } else {
        if (!pos.punctures.empty()) {
            if (pos.punctures.size() != 2) return false;
            auto end = walker.walk(pos.punctures[0].id, through, used);
            if (!end || *end != pos.punctures[1].id) return false;
        }
    }
    return used == walker.arc_count();
}

}  // namespace

VpcClass classify_vpc(const PairState& s, const std::string& vpcId) {
    const Vpc& v = s.vpc(vpcId);
    if (is_trivial_ball(s, v)) return {VpcKind::trivial_ball, ""};
    StrandWalker walker(s, v);

    std::vector<const Surface*> candidates;
    for (const auto& n : v.negatives) candidates.push_back(&s.surface(n));
    std::stable_sort(candidates.begin(), candidates.end(), [](const Surface* a, const Surface* b) {
        bool ta = a->role == Role::thin, tb = b->role == Role::thin;
        if (ta != tb) return ta;
        return a->id < b->id;
    });
    for (const Surface* c : candidates)
        if (auto kind = product_with(s, v, walker, c->id)) return {*kind, c->id};

    if (is_punctured_trivial_ball(s, v, walker)) return {VpcKind::punctured_trivial_ball, ""};
    return {VpcKind::general, ""};
}

bool is_punctured_product_between(const PairState& s, const std::string& vpcId, const std::string& partner) {
    const Vpc& v = s.vpc(vpcId);
    StrandWalker walker(s, v);
    return product_with(s, v, walker, partner).has_value();
}

}  // namespace bridgecalc
