#pragma once

#include <stdexcept>
#include <string>

namespace antiham {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not line up.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A documented precondition on an input (self-adjointness, label, validity
/// of a density matrix, ...) does not hold.
class ContractError : public Error {
public:
  using Error::Error;
};

/// Collapse was requested onto an outcome whose probability is below the
/// collapse floor.
class ZeroProbabilityError : public Error {
public:
  using Error::Error;
};

/// An operator on the doubled space does not commute with V and V† and so is
/// not the lift of any base-space operator.
class NotLiftableError : public Error {
public:
  using Error::Error;
};

/// An antilinear Hamiltonian term or generator violates (iH)† = -iH.
class ConditionViolation : public Error {
public:
  using Error::Error;
};

} // namespace antiham
