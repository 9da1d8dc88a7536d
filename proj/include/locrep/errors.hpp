#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduction modulo p loses a denominator or the leading coefficient.
struct BadPrime : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct NoRationalPoint : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

}  // namespace locrep
