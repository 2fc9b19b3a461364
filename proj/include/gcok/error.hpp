#pragma once

#include <stdexcept>
#include <string>

namespace gcok {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Sections, forms or operators belong to different frames.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

/// A structure failed one of the algebraic axioms required by an operation.
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (non-isotropic span, non-closed B, ...).
class PreconditionFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed text or document input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gcok
