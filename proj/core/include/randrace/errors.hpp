#pragma once

#include <stdexcept>

namespace randrace {

// An enumeration size guard tripped (see the per-operation caps and the CLI
// --max-n flag). Distinct from std::domain_error so callers can tell "bad
// input" from "too big to enumerate".
class cap_exceeded_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A runtime self-check that the underlying mathematics guarantees should
// never fire (unique nonnegative rotation, unique failing prefix, ...).
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact equality in a comparison the continuous model says is almost surely
// strict (duplicate stop points and the like).
class tie_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace randrace
