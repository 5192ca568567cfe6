#pragma once

#include <stdexcept>
#include <string>

namespace psg {

struct BadShape : std::invalid_argument {
  explicit BadShape(const std::string& what) : std::invalid_argument(what) {}
};

struct AssociativityViolation : std::invalid_argument {
  int i, j, k;
  AssociativityViolation(int i_, int j_, int k_)
      : std::invalid_argument("multiplication is not associative on basis triple (" +
                              std::to_string(i_) + "," + std::to_string(j_) + "," +
                              std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct NotIdempotent : std::invalid_argument {
  explicit NotIdempotent(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAnIdeal : std::invalid_argument {
  explicit NotAnIdeal(const std::string& what) : std::invalid_argument(what) {}
};

// Exhaustive enumeration would exceed the configured guard. Callers that
// need a reportable outcome catch this and surface it; it is never a
// silent skip.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BoundsTooLarge : std::runtime_error {
  uint64_t estimate;
  BoundsTooLarge(const std::string& what, uint64_t estimate_)
      : std::runtime_error(what + " (estimated candidate count " +
                           std::to_string(estimate_) + ")"),
        estimate(estimate_) {}
};

struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psg
