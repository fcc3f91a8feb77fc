#pragma once

#include "catmon/category.hpp"
#include "catmon/group_presentation.hpp"
#include "catmon/universal_monoid.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace catmon {

/// A group with solvable word problem: a free group on named letters, Z^n,
/// or the free product F(letters) * G where G is one of the first two.
struct GroupSpec {
  enum class Kind { Free, FreeAbelian, FreeProduct };
  Kind kind = Kind::Free;
  // Free: the alphabet. FreeProduct: alphabet of the free factor.
  std::vector<std::string> letters;
  // FreeAbelian only.
  std::size_t dimension = 0;
  // FreeProduct only: exactly one entry, the second factor.
  std::vector<GroupSpec> second;

  static GroupSpec free(std::vector<std::string> letters);
  static GroupSpec freeAbelian(std::size_t dimension);
  static GroupSpec freeProduct(std::vector<std::string> letters,
                               const GroupSpec &other);
  const GroupSpec &secondFactor() const { return second.front(); }

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

struct GroupWord {
  using Letters = std::vector<GroupLetter>;
  using Vector = std::vector<long long>;
  struct Syllable {
    // 0: the free factor, 1: the second factor.
    std::size_t factor = 0;
    std::variant<Letters, Vector> value;

    friend bool operator==(const Syllable &, const Syllable &) = default;
    friend bool operator<(const Syllable &a, const Syllable &b) {
      if (a.factor != b.factor)
        return a.factor < b.factor;
      return a.value < b.value;
    }
  };
  using Syllables = std::vector<Syllable>;

  std::variant<Letters, Vector, Syllables> value;

  friend bool operator==(const GroupWord &, const GroupWord &) = default;
  friend bool operator<(const GroupWord &a, const GroupWord &b) {
    return a.value < b.value;
  }
};

GroupWord identityOf(const GroupSpec &g);
bool isTrivial(const GroupWord &w);
/// Throws GroupMismatch unless w is a normal-form element of g.
void checkWord(const GroupSpec &g, const GroupWord &w);

GroupWord groupMultiply(const GroupSpec &g, const GroupWord &a, const GroupWord &b);
GroupWord groupInverse(const GroupSpec &g, const GroupWord &a);
/// Element of a free product lying in one factor.
GroupWord inFactor(const GroupSpec &product, std::size_t factor,
                   const GroupWord &element);

/// Free words as "a b^-1" ("1" when empty), vectors as "(1,0,0)", free
/// product elements as parenthesised syllables.
std::string formatWord(const GroupSpec &g, const GroupWord &w);
/// Parses a free word or a vector; free products are not parsed.
GroupWord parseGroupElement(const GroupSpec &g, std::string_view text);

/// Functor from a finite category to a group, one image per arrow.
/// Identity images are filled in by the constructors; a missing image for a
/// non-identity arrow is an empty optional.
struct CategoryFunctor {
  GroupSpec target;
  std::vector<std::optional<GroupWord>> images;
};

CategoryFunctor makeFunctor(const FiniteCategory &s, GroupSpec target,
                            const std::vector<std::pair<std::string, GroupWord>> &images);
/// Every arrow to the trivial group (free group on no letters).
CategoryFunctor trivialFunctor(const FiniteCategory &s);

struct SeparationReport {
  bool functorial = true;
  std::optional<std::pair<ArrowId, ArrowId>> functorialityFailure;
  bool separating = true;
  /// Two arrows of one hom-set with equal images. Hom-sets are scanned from
  /// the largest down, ties broken by (source, target).
  std::optional<std::pair<ArrowId, ArrowId>> violatingPair;
  bool passed() const { return functorial && separating; }
};

/// Throws MissingImage if some arrow has no image.
SeparationReport checkSeparation(const FiniteCategory &s, const CategoryFunctor &psi);

/// x -> sr(x)^-1 psi(x) tg(x) in F(objects) * G. When G is already such a
/// free product the object letters of the new copy get primes appended and
/// the result is flattened into a single free product.
CategoryFunctor highlightingExpansion(const FiniteCategory &s,
                                      const CategoryFunctor &psi);

/// The homomorphism Um(S) -> F * G used to certify embeddability.
struct SigmaMap {
  GroupSpec target;
  std::vector<GroupWord> arrowImages;
};

/// Throws SeparationRequired if psi does not separate hom-sets. If psi kills
/// some non-identity arrow it is first replaced by its expansion.
SigmaMap sigmaMap(const FiniteCategory &s, const CategoryFunctor &psi);
GroupWord sigmaImage(const SigmaMap &sigma, const ReducedSeq &x);
GroupWord sigmaImage(const ReducedSeq &x, const FiniteCategory &s,
                     const CategoryFunctor &psi);

struct EmbeddabilityReport {
  SeparationReport separation;
  bool embeds = false;
  std::size_t sampleLength = 0;
  std::size_t sampledElements = 0;
  bool sampledInjective = false;
  std::optional<std::pair<ReducedSeq, ReducedSeq>> collision;
};

EmbeddabilityReport embeddabilityVerdict(const FiniteCategory &s,
                                         const CategoryFunctor &psi,
                                         std::size_t maxLength = 3);

} // namespace catmon
