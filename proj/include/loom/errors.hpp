#pragma once

#include <stdexcept>
#include <string>

namespace loom {

/// Root of every error the library raises on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCartanType : public Error {
 public:
  using Error::Error;
};

/// Classical and affine weights were combined in one operation.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// The maximum of h^i over a path is not an integer, so the path is outside
/// the class of concatenated LS-type paths the root operators are defined on.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// A breakpoint does not lie on the requested 1/N grid.
class GridViolation : public Error {
 public:
  using Error::Error;
};

class NodeCapExceeded : public Error {
 public:
  using Error::Error;
};

class InconsistentEnergy : public Error {
 public:
  using Error::Error;
};

class DisconnectedTensorSquare : public Error {
 public:
  using Error::Error;
};

/// An element was looked up in a finite crystal that does not contain it.
class NotInCrystal : public Error {
 public:
  using Error::Error;
};

/// A vector left the divided-power lattice during a q -> 0 reduction.
class NotInLattice : public Error {
 public:
  using Error::Error;
};

}  // namespace loom
