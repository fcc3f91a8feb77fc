#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catmon {

using MonoidWord = std::vector<std::size_t>;

/// Monoid given by generators and relations u = v. Only homogeneous
/// presentations (|u| = |v| for every relation) are accepted by the word
/// problem routines; others throw NotHomogeneous there.
struct MonoidPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<MonoidWord, MonoidWord>> relations;

  std::optional<std::size_t> findGenerator(std::string_view name) const;
  bool homogeneous() const;
  /// Throws UnknownGenerator or DuplicateName.
  void validate() const;
};

/// Space-separated generator names; "1" or blank is the empty word.
MonoidWord parseMonoidWord(const MonoidPresentation &p, std::string_view text);
std::string formatMonoidWord(const MonoidPresentation &p, const MonoidWord &w);

inline constexpr std::size_t kDefaultClassLimit = 1000000;
inline constexpr std::size_t kDefaultMultipleSearch = 8;

/// All words equal to w, by closing under every relation in both directions
/// at every position. Throws SizeLimit past maxClassSize words.
std::set<MonoidWord> congruenceClass(const MonoidWord &w, const MonoidPresentation &p,
                                     std::size_t maxClassSize = kDefaultClassLimit);

bool equalInMonoid(const MonoidWord &u, const MonoidWord &v, const MonoidPresentation &p);

struct AtomsReport {
  /// Generators grouped by equality in the monoid, in generator order.
  std::vector<std::vector<std::size_t>> classes;
  /// Generators whose class contains no product of two nonempty words.
  std::vector<std::size_t> atoms;
};

AtomsReport atoms(const MonoidPresentation &p);

/// Shortest word w (first in generator order among those of minimal length)
/// that every x left-divides modulo the relations, searching lengths up to
/// maxLength.
std::optional<MonoidWord> commonRightMultiple(const std::vector<MonoidWord> &xs,
                                              const MonoidPresentation &p,
                                              std::size_t maxLength = kDefaultMultipleSearch);

struct M6Report {
  // Images of both sides of each relation as words over {a,b,x,y}.
  std::vector<std::pair<std::string, std::string>> relationImages;
  bool relationsHold = false;
  std::size_t maxLength = 0;
  std::size_t classesChecked = 0;
  bool injective = false;
  std::optional<std::pair<MonoidWord, MonoidWord>> collision;
  bool passed() const { return relationsHold && injective; }
};

/// Checks the substitution a->a, b->b, c->ax, d->by, e->xb, f->ya on the
/// monoid <a,b,c,d,e,f | ae = cb, da = bf>.
M6Report verifyM6Embedding(std::size_t maxLength = 5);

} // namespace catmon
