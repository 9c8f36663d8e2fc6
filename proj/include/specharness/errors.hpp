#pragma once

#include <stdexcept>
#include <string>

namespace specharness {

// An external toolchain (Java compiler/runtime, whole-program verifier) is
// not configured or cannot be found. Callers fall back to builtin paths or
// signal exit code 3.
struct BackendUnavailable : std::runtime_error {
  explicit BackendUnavailable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specharness
