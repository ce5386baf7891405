#pragma once

#include <stdexcept>
#include <string>

namespace pwclock {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operator/state dimension below 2 (or otherwise unusable).
class InvalidDimension : public Error {
  public:
    using Error::Error;
};

/// Component or monomial index outside 0..dim-1.
class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

/// Strict-mode expansion whose Gram matrix A†A is not a real scalar multiple
/// of the identity; carries the measured deviation in max-abs norm.
class NotUnitarizable : public Error {
  public:
    NotUnitarizable(const std::string& what, double deviation)
        : Error(what), deviation_(deviation) {}

    double deviation() const { return deviation_; }

  private:
    double deviation_;
};

/// Polar-mode expansion numerically singular (no well-defined unitary factor).
class SingularExpansion : public Error {
  public:
    using Error::Error;
};

/// Attempt to normalize the zero vector.
class ZeroState : public Error {
  public:
    using Error::Error;
};

/// Operator/state dimensions do not match.
class DimMismatch : public Error {
  public:
    using Error::Error;
};

/// An operation requiring a unitary-verified operator received one without
/// the verification tag.
class UnverifiedOperator : public Error {
  public:
    using Error::Error;
};

/// SnapshotBuffer lookup at a step with no stored entry.
class SnapshotMissing : public Error {
  public:
    using Error::Error;
};

}  // namespace pwclock
