#include "bridgecalc/half.hpp"

#include <charconv>
#include <stdexcept>

namespace bridgecalc {

std::string Half::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

namespace {

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

}  // namespace

Half Half::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Half(parse_int(text));
    if (text.substr(slash + 1) != "2")
        throw std::invalid_argument("only halves are representable: '" + text + "'");
    return from_twice(parse_int(text.substr(0, slash)));
}

std::ostream& operator<<(std::ostream& os, Half h) { return os << h.str(); }

}  // namespace bridgecalc
