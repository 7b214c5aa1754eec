#pragma once

#include <stdexcept>
#include <string>

namespace galois {

// Bad input or violated precondition (zero divisor, reducible modulus,
// mismatched coefficient domains, ...). CLI exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured search or size bound was exceeded. The input is valid but
// outside what the toolkit is willing to compute. CLI exit code 3.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-audit failed: an invariant that must hold for every valid input did
// not. Always a bug. CLI exit code 1.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace galois
