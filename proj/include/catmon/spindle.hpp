#pragma once

#include "catmon/category.hpp"
#include "catmon/poset.hpp"
#include "catmon/presented_monoid.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace catmon {

/// An interval [u,v] of height at least 2 whose maximal chains meet only in
/// u and v. Each chain is listed from u to v; the list is sorted.
struct Spindle {
  std::size_t u = 0;
  std::size_t v = 0;
  std::vector<std::vector<std::size_t>> chains;
};

/// Maximal chains of [u,v], each from u to v, sorted.
std::vector<std::vector<std::size_t>> maximalChains(const Poset &p, std::size_t u,
                                                    std::size_t v);

struct SpindleCriteria {
  // Comparability on the open interval is an equivalence relation.
  bool comparabilityEquivalence = false;
  // Distinct maximal chains intersect exactly in {u,v}.
  bool chainsDisjoint = false;
};

/// Throws NotComparable unless u < v, HeightTooSmall if nothing lies
/// strictly between them.
SpindleCriteria spindleCriteria(const Poset &p, std::size_t u, std::size_t v);
std::optional<Spindle> detectSpindle(const Poset &p, std::size_t u, std::size_t v);

bool isExtremeSpindle(const Poset &p, const Spindle &sp);

/// Name of the arrow replacing [u,v] along one chain: "chain:" followed by
/// the middle elements in chain order, comma separated.
std::string chainArrowName(const Poset &p, const std::vector<std::size_t> &chain);

/// Cat(P) without [u,v], plus one arrow per maximal chain Z with
/// [u,z][z,v] = Z for the middle elements z of Z. Throws NotExtreme.
FiniteCategory spindleCategory(const Poset &p, const Spindle &sp,
                               const ValidateOptions &options = {});

/// Generators [x,y] for x < y other than [u,v]; relations
/// [x,z] = [x,y][y,z] for x < y < z with (x,z) != (u,v). Not homogeneous.
MonoidPresentation spindleMonoidPresentation(const Poset &p, const Spindle &sp);

} // namespace catmon
