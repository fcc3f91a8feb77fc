#pragma once

#include "catmon/category.hpp"
#include "catmon/complex.hpp"
#include "catmon/group_words.hpp"
#include "catmon/poset.hpp"
#include "catmon/universal_monoid.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catmon {

/// Category of closed intervals: objects are the elements of P (same
/// order), arrows "[x,y]" for x <= y, identities named "[x,x]".
FiniteCategory catOfPoset(const Poset &p, const ValidateOptions &options = {});

/// The arrow [lo,hi] of a category built by catOfPoset (or any category
/// with at most one arrow per hom-set).
std::optional<ArrowId> intervalArrow(const FiniteCategory &catP, std::size_t lo,
                                     std::size_t hi);

struct GcdCriterionReport {
  bool leftOK = true;
  bool rightOK = true;
  // (a, y1, y2): y1, y2 in the up-set of a without a meet there (left), or in
  // the down-set of a without a join there (right).
  std::optional<std::array<std::size_t, 3>> leftWitness;
  std::optional<std::array<std::size_t, 3>> rightWitness;
  bool overall() const { return leftOK && rightOK; }
};

GcdCriterionReport gcdCriterion(const Poset &p);

/// Face poset of K ordered by inclusion; elements are named "{x,y,...}" and
/// listed by dimension, then lexicographically.
Poset barycentric(const SimplicialComplex &k);

/// Order-preserving map between posets, stored as element indices.
class IsotoneMap {
public:
  /// Throws UnknownElement for unmapped or unknown names and NotIsotone if
  /// some x <= y is sent to a non-comparable or reversed pair.
  static IsotoneMap fromPairs(const Poset &from, const Poset &to,
                              const std::vector<std::pair<std::string, std::string>> &pairs);
  static IsotoneMap fromImages(const Poset &from, const Poset &to,
                               std::vector<std::size_t> images);

  std::size_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::size_t> &images() const { return images_; }
  bool injective() const;

private:
  std::vector<std::size_t> images_;
};

/// HM(f): [x,y] -> [f(x),f(y)], extended multiplicatively and reduced.
ReducedSeq applyIntervalFunctor(const IsotoneMap &f, const FiniteCategory &catP,
                                const FiniteCategory &catQ, const ReducedSeq &x);

/// The free group on the elements of P.
GroupSpec freeGroupOn(const Poset &p);
/// [x1,y1]...[xn,yn] -> x1^-1 y1 ... xn^-1 yn, freely reduced.
GroupWord embedFreeGroup(const FiniteCategory &catP, const ReducedSeq &x);

/// Linear extension chosen by Kahn's algorithm, ties broken by element name.
struct LinearExtension {
  std::vector<std::size_t> order;    // position -> element
  std::vector<std::size_t> position; // element -> position
  /// Letter i is the step from order[i] to order[i+1], named "s<i><i+1>".
  std::vector<std::string> letters;
};

LinearExtension linearExtension(const Poset &p);
/// Letters (indices into ext.letters) of the image of x.
std::vector<std::size_t> embedFreeMonoid(const LinearExtension &ext,
                                         const FiniteCategory &catP,
                                         const ReducedSeq &x);
std::string formatMonoidWord(const LinearExtension &ext,
                             const std::vector<std::size_t> &word);

} // namespace catmon
