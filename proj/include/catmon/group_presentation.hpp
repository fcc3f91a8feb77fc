#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace catmon {

struct GroupLetter {
  std::size_t generator;
  int exponent; // +1 or -1

  friend bool operator==(const GroupLetter &, const GroupLetter &) = default;
  friend auto operator<=>(const GroupLetter &, const GroupLetter &) = default;
};

using GroupRelator = std::vector<GroupLetter>;

/// Group given by generators and relators (words equal to 1).
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupRelator> relators;

  std::optional<std::size_t> findGenerator(std::string_view name) const;
  /// Throws UnknownGenerator if a relator refers past the generator list.
  void validate() const;
};

GroupRelator inverse(const GroupRelator &w);
GroupRelator freelyReduce(const GroupRelator &w);
GroupRelator cyclicallyReduce(const GroupRelator &w);
/// Representative of w up to cyclic rotation and inversion, after free and
/// cyclic reduction: the lexicographically least candidate.
GroupRelator canonicalRelator(const GroupRelator &w);

std::string formatRelator(const GroupPresentation &p, const GroupRelator &w);

/// Rank of the relation matrix over the integers (exponent sums).
std::size_t relationMatrixRank(const GroupPresentation &p);
/// Free rank of the abelianization: generators minus relation matrix rank.
std::size_t abelianizationRank(const GroupPresentation &p);

/// Tietze simplification: sets every generator in `killed` to 1, reduces and
/// deduplicates relators, then repeatedly eliminates a generator occurring
/// exactly once in some relator by substituting its solution into the other
/// relators. Shorter relators are used first. Surviving generators keep their
/// names and relative order.
GroupPresentation simplifyPresentation(const GroupPresentation &p,
                                       const std::set<std::size_t> &killed = {});

} // namespace catmon
