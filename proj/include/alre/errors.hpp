#pragma once

#include <stdexcept>
#include <string>

namespace alre {

// Bad file contents or an instance violating its own invariants.
struct malformed_input_error : std::runtime_error {
    explicit malformed_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A search or enumeration ran past its explicit budget; distinct from a "no" answer.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its supported variant/rule family.
struct misuse_error : std::runtime_error {
    explicit misuse_error(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal assertion (never expected on valid inputs).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace alre
