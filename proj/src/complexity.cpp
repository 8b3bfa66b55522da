#include "bridgecalc/complexity.hpp"

#include <algorithm>
#include <functional>

namespace bridgecalc {

int complexity_entry(const Surface& thick) {
    return -2 * thick.chi() + static_cast<int>(thick.punctures.size()) + 2;
}

Complexity make_complexity(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return {std::move(entries)};
}

Complexity complexity(const PairState& s) {
    std::vector<int> entries;
    for (const auto& surf : s.surfaces)
        if (surf.role == Role::thick) entries.push_back(complexity_entry(surf));
    return make_complexity(std::move(entries));
}

std::strong_ordering compare_complexity(const Complexity& a, const Complexity& b) {
    return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                                  b.entries.end());
}

std::string complexity_text(const Complexity& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.entries[i]);
    }
    return out + "]";
}

}  // namespace bridgecalc
