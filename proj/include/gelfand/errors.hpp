#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

// A configured size limit (field order, group order, coset count) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. These indicate a bug or a broken
// involution, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

#define GELFAND_CHECK(cond, msg)                                          \
  do {                                                                    \
    if (!(cond)) throw ::gelfand::InvariantViolation(std::string(msg)); \
  } while (0)

}  // namespace gelfand
