#pragma once

#include <stdexcept>
#include <string>

namespace chev {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in incompatible scalar fields (e.g. Gaussian and Laurent).
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t rank, std::size_t size)
      : Error("singular matrix: rank " + std::to_string(rank) + " < " +
              std::to_string(size)),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class InvalidRoot : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NonUnitParameter : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

/// Symbol universe containing 0 or exceeding the size cap.
class InvalidUniverse : public Error {
 public:
  using Error::Error;
};

/// Zero functional, or a plane of dimension below 2.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class NoDecomposition : public Error {
 public:
  using Error::Error;
};

}  // namespace chev
