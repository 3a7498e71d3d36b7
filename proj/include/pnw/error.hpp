#pragma once

#include <stdexcept>
#include <string>

namespace pnw {

// Raised when an operation's documented input hypothesis does not hold
// (e.g. a non-prefix-normal word passed to compute_phi).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a request would exceed a configured enumeration or scan cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pnw
