#pragma once

#include "catmon/category.hpp"
#include "catmon/group_presentation.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catmon {

namespace detail {
struct SeqAccess;
}

/// Element of the universal monoid Um(S): a sequence of non-identity arrows
/// in which no two consecutive entries compose. The empty sequence is the
/// unit.
class ReducedSeq {
public:
  /// The unit of Um(S).
  static ReducedSeq unit(const FiniteCategory &s);
  /// Image of one arrow under the canonical functor S -> Um(S).
  static ReducedSeq generator(const FiniteCategory &s, ArrowId a);
  /// Wraps an already reduced sequence; throws NotReduced otherwise.
  static ReducedSeq fromReduced(const FiniteCategory &s,
                                std::vector<ArrowId> arrows);

  const std::vector<ArrowId> &arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }
  bool isUnit() const { return arrows_.empty(); }
  std::uint64_t categoryUid() const { return category_; }

  friend bool operator==(const ReducedSeq &, const ReducedSeq &) = default;
  friend auto operator<=>(const ReducedSeq &, const ReducedSeq &) = default;

private:
  friend struct detail::SeqAccess;
  ReducedSeq(std::uint64_t category, std::vector<ArrowId> arrows)
      : category_(category), arrows_(std::move(arrows)) {}

  std::uint64_t category_ = 0;
  std::vector<ArrowId> arrows_;
};

struct RewriteStep {
  enum class Kind { DropIdentity, Compose };
  std::size_t position;
  Kind kind;

  friend bool operator==(const RewriteStep &, const RewriteStep &) = default;
};

struct Reduction {
  ReducedSeq result;
  std::vector<RewriteStep> trace;
};

/// Normal form of a raw arrow sequence. Always rewrites the leftmost redex;
/// at a position holding an identity the identity is dropped.
Reduction reduce(const FiniteCategory &s, std::span<const ArrowId> raw);
ReducedSeq normalForm(const FiniteCategory &s, std::span<const ArrowId> raw);

/// Applies one step to a raw sequence (used to replay traces).
std::vector<ArrowId> applyStep(const FiniteCategory &s,
                               std::vector<ArrowId> seq, const RewriteStep &step);

/// Parses whitespace-separated arrow names; throws UnknownArrow.
std::vector<ArrowId> parseArrowWord(const FiniteCategory &s, std::string_view text);
/// Space-separated arrow names, or "1" for the unit.
std::string format(const FiniteCategory &s, const ReducedSeq &x);

ReducedSeq multiply(const FiniteCategory &s, const ReducedSeq &x,
                    const ReducedSeq &y);

/// First and last entries; throws EmptyElement on the unit.
std::pair<ArrowId, ArrowId> components(const ReducedSeq &x);

struct Division {
  bool divides = false;
  /// Set when divides holds and the side of S is cancellative, which makes
  /// the quotient unique.
  std::optional<ReducedSeq> quotient;
};

/// Left: is there z with y = x z. Right: y = z x. Requires S conical
/// (throws Precondition otherwise).
Division divides(Side side, const ReducedSeq &x, const ReducedSeq &y,
                 const FiniteCategory &s);

/// Gcd of a finite nonempty family, computed from the longest common prefix
/// (suffix for Right) and the gcd of the residual boundary arrows in S.
/// Requires S conical and cancellative on the side.
std::optional<ReducedSeq> gcdFamily(Side side, std::span<const ReducedSeq> xs,
                                    const FiniteCategory &s);

/// Lcm of two standard generators (sequences of length <= 1): Left gives the
/// least common right multiple. Absent iff there is no common multiple in S.
std::optional<ReducedSeq> lcmPair(Side side, const ReducedSeq &x,
                                  const ReducedSeq &y, const FiniteCategory &s);

/// Returns the entries of x after confirming that each one is the largest
/// arrow of S left dividing the remaining suffix. Requires S to be a left
/// gcd-category. Throws GreedyViolation if the property fails.
std::vector<ArrowId> greedyNormalForm(const ReducedSeq &x, const FiniteCategory &s);

/// Presentation of Ug(S): one generator per non-identity arrow, relator
/// f g h^-1 for each composite h = f;g of non-identities (f g when h is an
/// identity).
GroupPresentation universalGroupPresentation(const FiniteCategory &s);

/// All reduced sequences of length <= maxLength, shortest first, each length
/// in lexicographic arrow order.
std::vector<ReducedSeq> enumerateElements(const FiniteCategory &s,
                                          std::size_t maxLength);

} // namespace catmon
