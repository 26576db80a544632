#pragma once

#include <stdexcept>
#include <string>

namespace ccopt {

/// Input that could not be parsed (file syntax, malformed rationals, bad
/// enum values).  Maps to process exit code 2 in the command line tool.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally valid instance that admits no member (e.g. shape bounds
/// that cannot be met).  Maps to process exit code 3.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration budget was exceeded.  Maps to process exit code 4.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ccopt
