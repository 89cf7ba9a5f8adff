#pragma once

#include <stdexcept>
#include <string>

namespace l2betti {

// Input text that does not conform to a grammar (presentation files,
// word literals, serialized documents).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A well-formed input that violates an operation's precondition
// (missing assumption flags, trivial relator, inconsistent model, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace l2betti
