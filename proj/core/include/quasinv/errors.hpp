#pragma once

#include <stdexcept>
#include <string>

namespace quasinv {

// Malformed input text (group specs, multiplicities, polynomials, ...).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input that parses but lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Arithmetic across two different cyclotomic fields.
class FieldMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

// A certificate could not be completed at the requested bounds.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Verdict { False = 0, True = 1, Inconclusive = 2 };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "inconclusive";
    }
}

} // namespace quasinv
