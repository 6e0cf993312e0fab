#pragma once

#include <stdexcept>
#include <string>

namespace sigcheck {

/// Violated mathematical precondition (bad radii, empty point set, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A pair of classes outside the regime where a pair bound is known.
class UnsupportedClaimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Search would exceed the tractability guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed proof script or claim. `where` names the offending claim/field.
class StructuralError : public std::runtime_error {
public:
    StructuralError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sigcheck
