#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bridgecalc {

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const;
    std::string summary() const;
};

class InvalidState : public std::runtime_error {
public:
    explicit InvalidState(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// A caller-supplied argument does not meet an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A move was rejected; the input state is untouched.
class MoveRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal arithmetic identity failed to hold.
class IdentityFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input text does not match a schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bridgecalc
