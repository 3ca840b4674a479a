#ifndef BCX_ERRORS_HPP
#define BCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcx {

// Bad user-supplied data (malformed files, axiom violations, out-of-range
// labels). CLI exit code 2.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A search ran out of budget without deciding. CLI exit code 3.
struct budget_exhausted : std::runtime_error {
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed cross-check failed; indicates a bug, never expected at
// runtime. CLI exit code 1.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bcx

#endif
