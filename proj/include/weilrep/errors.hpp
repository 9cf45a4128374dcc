#pragma once

#include <stdexcept>
#include <string>

namespace weilrep {

/// Malformed or out-of-contract input: bad modulus, non-symplectic matrix,
/// non-isotropic subspace, unparsable document. The CLI maps it to exit code 3.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical identity that should hold failed beyond tolerance. Seeing one
/// means either the input broke a precondition or the implementation is wrong.
class ResidualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// scalar_ratio: operands are not proportional.
class NotProportionalError : public ResidualError {
 public:
  using ResidualError::ResidualError;
};

/// scalar_ratio: the reference operand is zero.
class ZeroOperatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotGaussianError : public ResidualError {
 public:
  using ResidualError::ResidualError;
};

/// The intertwining system for W(T) did not have a one-dimensional solution space.
class NullityError : public ResidualError {
 public:
  NullityError(const std::string& what, int nullity) : ResidualError(what), nullity_(nullity) {}
  int nullity() const noexcept { return nullity_; }

 private:
  int nullity_;
};

}  // namespace weilrep
