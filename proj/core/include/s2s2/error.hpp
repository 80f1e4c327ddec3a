#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace s2s2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact-linalg
class CompositionNonzero : public Error {
 public:
  CompositionNonzero() : Error("boundary_out * boundary_in != 0: not a chain complex") {}
};

// f2-rings
class InconsistentPresentation : public Error {
 public:
  using Error::Error;
};
class PresentationError : public Error {
 public:
  using Error::Error;
};
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};
class SingularPairing : public Error {
 public:
  using Error::Error;
};

// gamma-quadratic
class SymmetryNotInduced : public Error {
 public:
  using Error::Error;
};

// quat-geom
class NonUnitQuaternion : public Error {
 public:
  using Error::Error;
};
class ClosedFormMismatch : public Error {
 public:
  using Error::Error;
};
class OrderFailed : public Error {
 public:
  using Error::Error;
};
class FixedPointFound : public Error {
 public:
  FixedPointFound(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};
class IdentityViolated : public Error {
 public:
  using Error::Error;
};

// kkr
class NonTransverseDoublePoint : public Error {
 public:
  using Error::Error;
};
class SolverDiverged : public Error {
 public:
  using Error::Error;
};
class UnsupportedImmersion : public Error {
 public:
  using Error::Error;
};

}  // namespace s2s2
