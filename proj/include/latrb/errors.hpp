#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latrb {

/// Dense element index into a finite lattice.
using Element = std::uint32_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some pair of elements has no unique join or no unique meet.
class NotALattice : public Error {
 public:
  NotALattice(Element x, Element y, const std::string& what)
      : Error("not a lattice: " + what + " for (" + std::to_string(x) + ", " +
              std::to_string(y) + ")"),
        x(x),
        y(y) {}

  Element x;
  Element y;
};

class CyclicCovers : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("element index " + std::to_string(index) +
              " out of range for lattice of size " + std::to_string(size)) {}
};

class DuplicateCover : public Error {
 public:
  using Error::Error;
};

/// Malformed lattice, family or predicate descriptor.
class BadSpec : public Error {
 public:
  using Error::Error;
};

/// Operator family parameters violate the family's precondition.
class BadParams : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::size_t size, std::size_t limit)
      : Error("lattice size " + std::to_string(size) +
              " exceeds configured limit " + std::to_string(limit)),
        limit(limit) {}

  std::size_t limit;
};

class MixedLattices : public Error {
 public:
  using Error::Error;
};

class NotDistributive : public Error {
 public:
  NotDistributive() : Error("lattice is not distributive") {}
};

class NotRotaBaxter : public Error {
 public:
  NotRotaBaxter() : Error("operator is not a Rota-Baxter operator") {}
};

class NotIsotoneDerivation : public Error {
 public:
  NotIsotoneDerivation() : Error("operator is not an isotone derivation") {}
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& id) : Error("unknown check: " + id) {}
};

}  // namespace latrb
