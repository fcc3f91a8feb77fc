#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace catmon {

enum class ObjectId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::size_t toIndex(ObjectId o) { return static_cast<std::size_t>(o); }
constexpr std::size_t toIndex(ArrowId a) { return static_cast<std::size_t>(a); }

/// Left means "divides from the left" (b = a x); Right is the dual (b = x a).
enum class Side { Left, Right };

const char *toString(Side side);

/// Default bound on the number of arrows (identities included) accepted by
/// validateCategory.
inline constexpr std::size_t kDefaultMaxArrows = 10000;

/// Unvalidated category as read from a file or assembled by a construction.
/// Identities are implicit: one per object, named "id:<obj>" unless
/// overridden in identityNames. Composites with an identity factor are
/// implicit as well.
struct CategoryDescription {
  struct Arrow {
    std::string name;
    std::string source;
    std::string target;
  };
  struct Composite {
    std::string first;
    std::string second;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<Composite> composites;
  std::map<std::string, std::string> identityNames;
};

struct ValidateOptions {
  std::size_t maxArrows = kDefaultMaxArrows;
};

class FiniteCategory;

/// Checks a raw description and builds the category. Throws catmon::Error
/// with kind MissingComposite, AssociativityViolation, BadIdentity,
/// BadComposability, UnknownObject, UnknownArrow, DuplicateName or
/// SizeLimit.
FiniteCategory validateCategory(const CategoryDescription &raw,
                                const ValidateOptions &options = {});

/// Arrow-only finite category, immutable after validation.
///
/// Arrows are numbered densely; identities come first (identity of object o
/// has index o), followed by the declared arrows in declaration order.
class FiniteCategory {
public:
  std::size_t objectCount() const { return objectNames_.size(); }
  std::size_t arrowCount() const { return arrows_.size(); }

  const std::string &objectName(ObjectId o) const {
    return objectNames_[toIndex(o)];
  }
  const std::string &arrowName(ArrowId a) const {
    return arrows_[toIndex(a)].name;
  }

  std::optional<ObjectId> findObject(std::string_view name) const;
  /// Also resolves "id:<obj>" to the identity of <obj>.
  std::optional<ArrowId> findArrow(std::string_view name) const;

  ObjectId source(ArrowId a) const { return arrows_[toIndex(a)].source; }
  ObjectId target(ArrowId a) const { return arrows_[toIndex(a)].target; }
  ArrowId identity(ObjectId o) const { return ArrowId(toIndex(o)); }
  bool isIdentity(ArrowId a) const { return toIndex(a) < objectCount(); }

  /// Composite "f then g"; defined iff target(f) == source(g).
  std::optional<ArrowId> compose(ArrowId f, ArrowId g) const;

  std::span<const ArrowId> arrowsFrom(ObjectId o) const {
    return outgoing_[toIndex(o)];
  }
  std::span<const ArrowId> arrowsInto(ObjectId o) const {
    return incoming_[toIndex(o)];
  }
  std::vector<ArrowId> homSet(ObjectId from, ObjectId to) const;

  /// Sorted list of all a with b = a x for some x.
  std::span<const ArrowId> leftDivisorsOf(ArrowId b) const {
    return leftDivisors_[toIndex(b)];
  }
  /// Sorted list of all a with b = x a for some x.
  std::span<const ArrowId> rightDivisorsOf(ArrowId b) const {
    return rightDivisors_[toIndex(b)];
  }

  bool conical() const { return conical_; }
  bool leftCancellative() const { return leftCancellative_; }
  bool rightCancellative() const { return rightCancellative_; }

  /// Distinguishes categories built by separate validations; copies share it.
  std::uint64_t uid() const { return uid_; }

  /// Description that validates back to an identical category.
  CategoryDescription describe() const;

private:
  friend FiniteCategory validateCategory(const CategoryDescription &,
                                         const ValidateOptions &);

  struct ArrowRecord {
    std::string name;
    ObjectId source;
    ObjectId target;
  };

  static constexpr std::uint32_t kUndefined = 0xffffffffu;

  void computeDerivedData();

  std::vector<std::string> objectNames_;
  std::vector<ArrowRecord> arrows_;
  std::unordered_map<std::string, ArrowId> arrowByName_;
  std::unordered_map<std::string, ObjectId> objectByName_;
  std::vector<std::vector<ArrowId>> outgoing_;
  std::vector<std::vector<ArrowId>> incoming_;
  // Position of each arrow inside outgoing_[source].
  std::vector<std::uint32_t> outPosition_;
  // compRow_[f][outPosition_[g]] = f;g for g leaving target(f).
  std::vector<std::vector<std::uint32_t>> compRow_;
  std::vector<std::vector<ArrowId>> leftDivisors_;
  std::vector<std::vector<ArrowId>> rightDivisors_;
  bool conical_ = true;
  bool leftCancellative_ = true;
  bool rightCancellative_ = true;
  std::uint64_t uid_ = 0;
};

bool isConical(const FiniteCategory &s);
bool isLeftCancellative(const FiniteCategory &s);
bool isRightCancellative(const FiniteCategory &s);

/// Witness x with b = a x (Left) or b = x a (Right), if any.
std::optional<ArrowId> catDivides(Side side, ArrowId a, ArrowId b,
                                  const FiniteCategory &s);

/// Greatest common divisor for the side's divisibility preorder. Throws
/// SourceMismatch (Left) or TargetMismatch (Right) when the arrows do not
/// share the relevant endpoint.
std::optional<ArrowId> catGcd(Side side, ArrowId a, ArrowId b,
                              const FiniteCategory &s);
std::optional<ArrowId> catGcdFamily(Side side, std::span<const ArrowId> family,
                                    const FiniteCategory &s);

/// Least common multiple for the side's divisibility preorder: Left looks for
/// the least common right multiple of arrows with a common source.
std::optional<ArrowId> catLcm(Side side, ArrowId a, ArrowId b,
                              const FiniteCategory &s);

struct GcdCategoryReport {
  bool conical = false;
  bool leftCancellative = false;
  bool rightCancellative = false;
  bool leftGcds = false;
  bool rightGcds = false;
  // First pair (in arrow order) lacking a gcd, per side.
  std::optional<std::pair<ArrowId, ArrowId>> leftFailure;
  std::optional<std::pair<ArrowId, ArrowId>> rightFailure;

  bool leftGcdCategory() const {
    return conical && leftCancellative && leftGcds;
  }
  bool rightGcdCategory() const {
    return conical && rightCancellative && rightGcds;
  }
  bool overall() const { return leftGcdCategory() && rightGcdCategory(); }
};

GcdCategoryReport isGcdCategory(const FiniteCategory &s);

} // namespace catmon
