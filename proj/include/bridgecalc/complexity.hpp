#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bridgecalc/state.hpp"

namespace bridgecalc {

// One entry -2 chi + |H n T| + 2 per thick surface, sorted non-increasing.
struct Complexity {
    std::vector<int> entries;
    bool operator==(const Complexity&) const = default;
};

int complexity_entry(const Surface& thick);
Complexity complexity(const PairState& s);
Complexity make_complexity(std::vector<int> entries);

// Lexicographic on the sorted entries; a proper prefix is smaller.
std::strong_ordering compare_complexity(const Complexity& a, const Complexity& b);

std::string complexity_text(const Complexity& c);

}  // namespace bridgecalc
