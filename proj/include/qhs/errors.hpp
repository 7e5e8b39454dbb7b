#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhs {

// Base class for all domain errors raised by the library. Each concrete
// error corresponds to a violated precondition of some operation.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDivisible : Error {
  using Error::Error;
};
struct InvalidGenerator : Error {
  using Error::Error;
};
struct ContextMismatch : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct InvalidBlock : Error {
  using Error::Error;
};
struct InvalidFlagType : Error {
  using Error::Error;
};
struct ComponentTooLarge : Error {
  using Error::Error;
};
struct NoQCommutation : Error {
  using Error::Error;
};
struct NotInAugmentationIdeal : Error {
  using Error::Error;
};
struct NotAUnit : Error {
  using Error::Error;
};
struct NotOnCircle : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};

// Parse diagnostic carrying the byte offset of the failure and a
// human-readable list of what would have been accepted there.
struct SyntaxError : Error {
  SyntaxError(std::size_t offset, const std::string& expected)
      : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset(offset),
        expected(expected) {}
  std::size_t offset;
  std::string expected;
};

}  // namespace qhs
