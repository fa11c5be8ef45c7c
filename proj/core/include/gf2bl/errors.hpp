#pragma once

#include <stdexcept>
#include <string>

namespace gf2bl {

// Malformed textual input (hex element, modulus).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Operands belong to different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

// An operation was called outside its mathematical domain (inverse of zero,
// trace bit of an element outside the requested subfield, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A derived algebraic fact failed to hold. Always a bug; never swallowed.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gf2bl
