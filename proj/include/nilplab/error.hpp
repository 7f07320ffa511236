#ifndef NILPLAB_ERROR_HPP
#define NILPLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nilplab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing scalars, vectors or algebras over different fields.
struct FieldMismatchError : Error {
  using Error::Error;
};

/// Incompatible matrix/vector dimensions or indices out of range.
struct DimensionError : Error {
  using Error::Error;
};

/// Inverting zero, or a singular 1+u in quasiinverse computations.
struct NotInvertibleError : Error {
  using Error::Error;
};

/// A candidate homomorphism matrix that fails h(e_i e_j) = h(e_i) h(e_j).
struct NotMultiplicativeError : Error {
  NotMultiplicativeError(const std::string& msg, std::size_t i, std::size_t j)
      : Error(msg), witness_i(i), witness_j(j) {}
  std::size_t witness_i;
  std::size_t witness_j;
};

/// Quotient by a subspace that is not an ideal.
struct NotAnIdealError : Error {
  using Error::Error;
};

/// solve_unipotent applied to an operator that is not nilpotent.
struct NotNilpotentError : Error {
  using Error::Error;
};

/// Construction would exceed the configured dimension cap (NILPLAB_MAX_DIM).
struct LimitError : Error {
  using Error::Error;
};

/// Malformed input file (algebra JSON, scenario config).
struct ParseError : Error {
  using Error::Error;
};

/// An internal consistency assertion failed.  These conditions are
/// mathematically guaranteed; a violation means a bug, so callers should
/// treat it as fatal rather than recoverable.
struct InvariantViolation : Error {
  using Error::Error;
};

/// Dimension cap for constructed algebras; reads NILPLAB_MAX_DIM once
/// (default 512).
std::size_t max_dimension();

void check_dimension_cap(std::size_t dim, const std::string& what);

}  // namespace nilplab

#endif
