#pragma once

#include <stdexcept>
#include <string>

namespace beadweave {

// Malformed combinatorial data (bad incidence, non-tree cut set, ...).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated domain.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Bad text input for one of the file formats.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beadweave
