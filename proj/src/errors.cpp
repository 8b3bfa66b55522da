#include "bridgecalc/errors.hpp"

#include <algorithm>

namespace bridgecalc {

bool ValidationReport::has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.code + ": " + v.message;
    }
    return out;
}

InvalidState::InvalidState(ValidationReport report)
    : std::runtime_error("invalid state: " + report.summary()), report_(std::move(report)) {}

}  // namespace bridgecalc
