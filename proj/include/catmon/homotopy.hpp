#pragma once

#include "catmon/complex.hpp"
#include "catmon/group_presentation.hpp"
#include "catmon/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catmon {

/// Generator name of the edge {x,y}, x before y in vertex order.
std::string edgeGenerator(const SimplicialComplex &k, std::size_t x, std::size_t y);

/// One generator per edge; for every 2-simplex and every ordering (x,y,z)
/// of its vertices the relator [x,z]^-1 [x,y] [y,z], where [y,x] stands for
/// [x,y]^-1. Relators equal up to rotation and inversion are kept once.
GroupPresentation floatingPresentation(const SimplicialComplex &k);

struct SpanningTree {
  std::size_t root = 0;
  // Each edge as (parent, child) in vertex indices, in discovery order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Breadth-first tree from the least vertex, neighbours visited in vertex
/// order. Throws Disconnected.
SpanningTree spanningTree(const SimplicialComplex &k);

/// Kills the tree-edge generators and simplifies; the result presents the
/// fundamental group at the root.
GroupPresentation tietzeCollapse(const SimplicialComplex &k,
                                 const GroupPresentation &floating,
                                 const SpanningTree &tree);

struct FloatingDecomposition {
  std::size_t edgeCount = 0;
  std::size_t treeEdgeCount = 0;
  GroupPresentation pi1;
  // Set only when the collapsed presentation has no relators.
  std::optional<std::size_t> pi1FreeRank;
  std::optional<std::size_t> totalFreeRank;
};

FloatingDecomposition floatingDecomposition(const SimplicialComplex &k);

/// Complex of nonempty chains of P, stored by its maximal chains. Vertex
/// names are the element names.
SimplicialComplex chainComplex(const Poset &p);

struct MeasValReport {
  FloatingDecomposition floating;
  // Free rank of the abelianized universal group of Cat(P).
  std::size_t universalGroupAbelianRank = 0;
  bool agree = false;
};

/// Compares the floating route on the chain complex with the universal
/// group of Cat(P). Throws Disconnected.
MeasValReport crossCheckMeasVal(const Poset &p);

} // namespace catmon
