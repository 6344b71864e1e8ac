#pragma once

#include <stdexcept>
#include <string>

namespace homcode {

// Every domain failure in the library raises Error with a machine-readable
// kind plus a human-readable message.  `detail` optionally carries a
// pre-serialized JSON object with a witness for the failure (an odd face id,
// a non-commuting generator pair, ...) so callers can surface it without
// re-deriving anything.
enum class ErrorKind {
  // combinatorial-map validation
  NotPermutation,
  NotInvolution,
  FixedPointEdge,
  OddDartCount,
  Disconnected,
  // transforms / coloring
  WrongValence,
  NotColorable,
  // Pauli / stabilizer algebra
  LengthMismatch,
  NonAbelian,
  MinusIdentityInGroup,
  ZeroLogicalQubits,
  // label sets and transforms
  MalformedLabelSet,
  CountChangingTransform,
  TransformBreaksCommutation,
  // punctures / boundaries
  NoSuchGenerator,
  InvalidBoundarySpec,
  // generators / analyses
  ConstraintViolation,
  DegenerateParameters,
  MalformedGenerators,
  // I/O
  ParseError,
  ValidationError,
  IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string detail = "")
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  // Empty, or a serialized JSON object describing the witness.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace homcode
