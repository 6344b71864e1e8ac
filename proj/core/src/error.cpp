#include "homcode/error.hpp"

namespace homcode {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::FixedPointEdge: return "FixedPointEdge";
    case ErrorKind::OddDartCount: return "OddDartCount";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WrongValence: return "WrongValence";
    case ErrorKind::NotColorable: return "NotColorable";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonAbelian: return "NonAbelian";
    case ErrorKind::MinusIdentityInGroup: return "MinusIdentityInGroup";
    case ErrorKind::ZeroLogicalQubits: return "ZeroLogicalQubits";
    case ErrorKind::MalformedLabelSet: return "MalformedLabelSet";
    case ErrorKind::CountChangingTransform: return "CountChangingTransform";
    case ErrorKind::TransformBreaksCommutation: return "TransformBreaksCommutation";
    case ErrorKind::NoSuchGenerator: return "NoSuchGenerator";
    case ErrorKind::InvalidBoundarySpec: return "InvalidBoundarySpec";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::MalformedGenerators: return "MalformedGenerators";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace homcode
