#pragma once

// Independent reference arithmetic for the tests. Works on the JSON text of a state
// with plain rationals, sharing no code with the engine's invariant sums.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include <json.hpp>

#include "bridgecalc/half.hpp"

namespace oracle {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Rational operator+(Rational o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(Rational o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(Rational o) const { return {num * o.num, den * o.den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

inline Rational of(bridgecalc::Half h) { return {h.twice(), 2}; }

struct Totals {
    Rational netchi, netg, netw;
    std::map<int, Rational> netx_m;
};

inline Totals totals(const nlohmann::ordered_json& state, std::initializer_list<int> ms) {
    Totals t;
    std::int64_t gp = 0, gm = 0, np = 0, nm = 0;
    for (const auto& s : state["surfaces"]) {
        std::string role = s["role"];
        std::int64_t sign = role == "thick" ? 1 : role == "thin" ? -1 : 0;
        if (sign == 0) continue;
        std::int64_t genus = s["genus"];
        std::int64_t chi = 2 - 2 * genus;
        std::int64_t w = 0;
        for (const auto& p : s["punctures"]) w += p["weight"].get<std::int64_t>();
        (sign > 0 ? gp : gm) += genus;
        (sign > 0 ? np : nm) += 1;
        t.netchi = t.netchi + Rational(-sign * chi);
        t.netw = t.netw + Rational(sign * w);
        for (int m : ms) t.netx_m[m] = t.netx_m[m] + Rational(sign * (-m * chi + w), 2);
    }
    t.netg = Rational(gp - gm + nm - np + 1);
    return t;
}

// x_m of one closed surface: (-m chi + w) / 2.
inline Rational x_m(std::int64_t genus, std::int64_t weight, std::int64_t m) {
    return Rational(-m * (2 - 2 * genus) + weight, 2);
}

}  // namespace oracle
