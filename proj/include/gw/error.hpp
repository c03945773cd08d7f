#pragma once

#include <stdexcept>
#include <string>

namespace gw {

/// Thrown when a caller violates a documented precondition (bad dimensions,
/// mixed moduli, non-subgroup input, ...).  Maps to CLI exit code 1.
class contract_error : public std::invalid_argument {
public:
  explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an internal cross-check fails: two independent computations of
/// the same quantity disagree, or a certified structural fact does not hold on
/// concrete data.  This is never a user error.  Maps to CLI exit code 2.
class consistency_error : public std::logic_error {
public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw contract_error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw consistency_error(what);
}

} // namespace gw
