#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tsrmb {

// Absolute tolerance for all objective-value comparisons.
inline constexpr double kEps = 1e-9;

// Every failure carries a stable machine-readable name (e.g. "NoPerfectMatching",
// "InsufficientDrivers") next to the human-readable message. The CLI maps names
// to exit codes; tests match on names.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& what) {
  throw Error(name, what);
}

}  // namespace tsrmb
