#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlcode {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (argument out of range,
/// odd m, malformed tuple, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands that must have the same bit length did not.
class LengthMismatch : public InvalidArgument {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : InvalidArgument("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A persisted file is truncated, has the wrong magic, or fails validation.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (missing file, unwritable directory).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Majority vote was tied. `level` is the coefficient degree being decoded
/// (0 for the constant coefficient a_0), `row` the generator-matrix row.
class DecodeFailure : public Error {
 public:
  DecodeFailure(unsigned level, std::size_t row)
      : Error("decode failure: tied majority for row " + std::to_string(row) + " at degree " +
              std::to_string(level)),
        level_(level),
        row_(row) {}

  unsigned level() const noexcept { return level_; }
  std::size_t row() const noexcept { return row_; }

 private:
  unsigned level_;
  std::size_t row_;
};

/// Decryption could not recover a message. Wraps a DecodeFailure.
class DecryptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlcode
