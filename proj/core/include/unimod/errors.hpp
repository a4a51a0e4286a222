#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unimod/integer.hpp"

namespace unimod {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, minor size out of range, ragged rows.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold for the given arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The rows do not span a space of the expected dimension.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A square submatrix together with its determinant.
struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Integer value;
};

/// The rows do not form a unimodular system. Carries the offending minor
/// when one is available.
class NotUnimodularError : public Error {
 public:
  NotUnimodularError(const std::string& what, std::optional<Minor> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::optional<Minor>& witness() const { return witness_; }

 private:
  std::optional<Minor> witness_;
};

/// An enumeration would exceed its configured size cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// A graph operation that needs a connected graph received a disconnected one.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// The requested system would have no forms or dimension zero.
class DegenerateSystemError : public Error {
 public:
  using Error::Error;
};

/// A vector that should lie in a lattice does not.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace unimod
