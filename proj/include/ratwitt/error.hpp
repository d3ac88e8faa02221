#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratwitt {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed literal or descriptor. `position` is a 0-based byte offset into
// the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands live over different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// The ring lacks a required structure (field, domain, torsion-freeness, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Not enough series coefficients to answer. `required` is the minimum
// precision that would be sufficient.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, std::size_t required)
      : Error(what + " (requires precision >= " + std::to_string(required) + ")"),
        required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

// A series has no rational representative within the requested bound.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ratwitt
