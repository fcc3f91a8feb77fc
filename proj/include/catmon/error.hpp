#pragma once

#include <stdexcept>
#include <string>

namespace catmon {

/// Classifies every failure the library reports. The CLI maps all of them
/// to exit code 2 except GreedyViolation, which signals an internal bug.
enum class ErrorKind {
  Parse,
  UnknownObject,
  UnknownArrow,
  UnknownElement,
  UnknownGenerator,
  DuplicateName,
  MissingComposite,
  AssociativityViolation,
  BadIdentity,
  BadComposability,
  RedundantCover,
  CyclicOrder,
  RedundantSimplex,
  SizeLimit,
  CategoryMismatch,
  NotReduced,
  EmptyElement,
  EmptyFamily,
  SourceMismatch,
  TargetMismatch,
  NotIsotone,
  NotComparable,
  HeightTooSmall,
  NotExtreme,
  Disconnected,
  GroupMismatch,
  MissingImage,
  SeparationRequired,
  NotHomogeneous,
  GreedyViolation,
  Precondition,
};

const char *toString(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace catmon
