#ifndef TONNETZ_ERRORS_HPP
#define TONNETZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tonnetz {

// Input that violates a documented precondition (bad shape, bad flip, ...).
// Plain std::invalid_argument and std::out_of_range are used for those; the
// types below mark conditions that signal an internal contradiction rather
// than bad input.

// An operation that requires a surface (every edge in at most two faces) was
// handed a complex with a higher-incidence edge.
struct NotASurfaceError : std::logic_error {
  explicit NotASurfaceError(const std::string& what) : std::logic_error(what) {}
};

// A contract between caller and callee was violated, e.g. boundary circuit
// extraction on a closed surface.
struct ContractViolationError : std::logic_error {
  explicit ContractViolationError(const std::string& what) : std::logic_error(what) {}
};

// The topological oracle met a configuration the classification theorem says
// cannot occur. Always a bug, never expected at runtime.
struct UnclassifiableError : std::logic_error {
  explicit UnclassifiableError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tonnetz

#endif
