#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace bridgecalc {

// Exact half-integer, stored as twice its value.
class Half {
public:
    constexpr Half() = default;
    constexpr Half(std::int64_t integer) : twice_(2 * integer) {}

    static constexpr Half from_twice(std::int64_t twice) {
        Half h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr Half operator-() const { return from_twice(-twice_); }
    constexpr Half operator+(Half o) const { return from_twice(twice_ + o.twice_); }
    constexpr Half operator-(Half o) const { return from_twice(twice_ - o.twice_); }
    constexpr Half operator*(std::int64_t k) const { return from_twice(twice_ * k); }
    constexpr Half& operator+=(Half o) { twice_ += o.twice_; return *this; }
    constexpr Half& operator-=(Half o) { twice_ -= o.twice_; return *this; }

    constexpr bool operator==(const Half&) const = default;
    constexpr auto operator<=>(const Half&) const = default;

    // "3", "-1", "5/2", "-1/2"
    std::string str() const;
    static Half parse(const std::string& text);

private:
    std::int64_t twice_ = 0;
};

inline constexpr Half operator*(std::int64_t k, Half h) { return h * k; }

std::ostream& operator<<(std::ostream& os, Half h);

}  // namespace bridgecalc
