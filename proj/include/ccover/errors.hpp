#pragma once

#include <stdexcept>
#include <string>

namespace ccover {

// Error hierarchy; the CLI maps each type to a distinct exit code.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A structural problem in an instance or construction (e.g. a clause that
// cannot be laid out, a pair that cannot be blocked).
struct BuildError : std::runtime_error {
  explicit BuildError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccover
