#pragma once

#include <stdexcept>
#include <string>

namespace involab {

// Input outside the domain of an operation (not an involution, wrong parity, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested size exceeds a configured enumeration or truncation limit.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown catalog entry, verification target or map name.
struct UnknownName : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace involab
