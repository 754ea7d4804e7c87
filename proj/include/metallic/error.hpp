#pragma once

#include <stdexcept>
#include <string>

namespace metallic {

// Input lies outside an operation's mathematical domain (sqrt of a negative,
// division by zero, complex roots).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A stated precondition was violated (wrong parity, zero phi, k = 0, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace metallic
