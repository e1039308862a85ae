#ifndef LRC_ERRORS_HPP
#define LRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrc {

// Enumeration work would exceed the configured budget. Callers must shrink
// the instance or raise the budget explicitly; we never silently truncate.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A randomized search ran out of attempts (construction retries, deep-hole
// sampling, candidate draws).
class RetriesExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A post-construction check failed: the produced object does not satisfy the
// guarantee it was supposed to carry.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace lrc

#endif
