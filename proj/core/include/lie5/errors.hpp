#pragma once

#include <stdexcept>
#include <string>

namespace lie5 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& name)
      : Error("unknown algebra name: " + name) {}
};

// Jacobi identity failed; carries the first failing basis triple.
struct JacobiFails : Error {
  JacobiFails(std::size_t i, std::size_t j, std::size_t k,
              const std::string& where)
      : Error(where + ": Jacobi fails on basis triple (" + std::to_string(i) +
              ", " + std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

struct ActionNotDerivation : Error {
  using Error::Error;
};

struct ActionNotHomomorphism : Error {
  using Error::Error;
};

struct ActionInvalid : Error {
  using Error::Error;
};

struct IncompatibleRepresentation : Error {
  using Error::Error;
};

struct DegenerateParameter : Error {
  using Error::Error;
};

struct PrecisionExhausted : Error {
  using Error::Error;
};

}  // namespace lie5
