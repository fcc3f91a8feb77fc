#include "catmon/error.hpp"

namespace catmon {

const char *toString(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::UnknownObject: return "UnknownObject";
  case ErrorKind::UnknownArrow: return "UnknownArrow";
  case ErrorKind::UnknownElement: return "UnknownElement";
  case ErrorKind::UnknownGenerator: return "UnknownGenerator";
  case ErrorKind::DuplicateName: return "DuplicateName";
  case ErrorKind::MissingComposite: return "MissingComposite";
  case ErrorKind::AssociativityViolation: return "AssociativityViolation";
  case ErrorKind::BadIdentity: return "BadIdentity";
  case ErrorKind::BadComposability: return "BadComposability";
  case ErrorKind::RedundantCover: return "RedundantCover";
  case ErrorKind::CyclicOrder: return "CyclicOrder";
  case ErrorKind::RedundantSimplex: return "RedundantSimplex";
  case ErrorKind::SizeLimit: return "SizeLimit";
  case ErrorKind::CategoryMismatch: return "CategoryMismatch";
  case ErrorKind::NotReduced: return "NotReduced";
  case ErrorKind::EmptyElement: return "EmptyElement";
  case ErrorKind::EmptyFamily: return "EmptyFamily";
  case ErrorKind::SourceMismatch: return "SourceMismatch";
  case ErrorKind::TargetMismatch: return "TargetMismatch";
  case ErrorKind::NotIsotone: return "NotIsotone";
  case ErrorKind::NotComparable: return "NotComparable";
  case ErrorKind::HeightTooSmall: return "HeightTooSmall";
  case ErrorKind::NotExtreme: return "NotExtreme";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::GroupMismatch: return "GroupMismatch";
  case ErrorKind::MissingImage: return "MissingImage";
  case ErrorKind::SeparationRequired: return "SeparationRequired";
  case ErrorKind::NotHomogeneous: return "NotHomogeneous";
  case ErrorKind::GreedyViolation: return "GreedyViolation";
  case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

} // namespace catmon
