#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bridgecalc {

enum class Role { thick, thin, boundary, vertex };

std::string role_name(Role r);
Role role_from_name(const std::string& name);

struct Puncture {
    std::string id;
    int weight = 1;
    bool operator==(const Puncture&) const = default;
};

struct Surface {
    std::string id;
    Role role = Role::thick;
    int genus = 0;
    std::vector<Puncture> punctures;
    // Only meaningful for thick and thin surfaces: the VPC the normal points into.
    std::string direction;

    int chi() const { return 2 - 2 * genus; }
    int weight() const;
    bool is_sphere() const { return genus == 0; }
    bool has_puncture(const std::string& pid) const;
    bool operator==(const Surface&) const = default;
};

// Vertical arcs are stored as (end on the positive boundary, end on a negative boundary).
using Arc = std::pair<std::string, std::string>;

struct Tangle {
    std::vector<Arc> bridge;
    std::vector<Arc> vertical;
    std::vector<Arc> ghost;
    int coreLoops = 0;
    bool operator==(const Tangle&) const = default;
};

struct Vpc {
    std::string id;
    std::string positive;
    std::vector<std::string> negatives;
    Tangle tangle;

    bool has_negative(const std::string& sid) const;
    bool operator==(const Vpc&) const = default;
};

struct Flags {
    bool everySphereSeparates = true;
    bool irreducible = true;
    bool operator==(const Flags&) const = default;
};

struct PairState {
    std::vector<Surface> surfaces;
    std::vector<Vpc> vpcs;
    Flags flags;

    const Surface* find_surface(const std::string& id) const;
    const Vpc* find_vpc(const std::string& id) const;
    Surface* find_surface(const std::string& id);
    Vpc* find_vpc(const std::string& id);
    // Throw std::out_of_range when missing.
    const Surface& surface(const std::string& id) const;
    const Vpc& vpc(const std::string& id) const;

    // VPCs having `sid` as positive or negative boundary, in state order.
    std::vector<std::string> adjacent_vpcs(const std::string& sid) const;
    // The other VPC across a thick or thin surface.
    std::string other_side(const std::string& sid, const std::string& vpcId) const;

    std::vector<const Surface*> with_role(Role r) const;
    std::size_t size() const { return surfaces.size() + vpcs.size(); }

    bool operator==(const PairState&) const = default;
};

// puncture id -> (surface id, weight)
struct PunctureInfo {
    std::string surface;
    int weight = 0;
};
std::map<std::string, PunctureInfo> puncture_index(const PairState& s);

// Every arc of the tangle, in the order bridge, vertical, ghost.
std::vector<Arc> all_arcs(const Tangle& t);

}  // namespace bridgecalc
