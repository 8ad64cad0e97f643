#pragma once

#include <stdexcept>

namespace sqrtlab {

/// Argument outside an operation's mathematical domain (zero modulus,
/// non-invertible residue, composite where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation refused to run because the requested size exceeds its
/// configured work limit.  Never signals a wrong answer.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqrtlab
