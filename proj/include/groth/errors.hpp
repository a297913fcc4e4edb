#pragma once

#include <stdexcept>
#include <string>

namespace groth {

// Violated mathematical precondition (e.g. input not vexillary).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, never a bad input.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groth
