#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmon {

/// A simplex is a sorted list of vertex indices.
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex given by its maximal simplices.
/// Vertices are sorted by name; faces are generated on demand.
class SimplicialComplex {
public:
  /// Each entry is a nonempty list of vertex names. Rejects empty simplices
  /// and simplices that are faces of other listed ones.
  static SimplicialComplex
  fromMaximalSimplices(const std::vector<std::vector<std::string>> &simplices);

  std::size_t vertexCount() const { return vertices_.size(); }
  const std::string &vertexName(std::size_t v) const { return vertices_[v]; }
  const std::vector<std::string> &vertices() const { return vertices_; }
  std::optional<std::size_t> findVertex(std::string_view name) const;

  const std::vector<Simplex> &maximalSimplices() const { return maximal_; }

  bool contains(const Simplex &s) const;
  /// All simplices with exactly dim+1 vertices, in lexicographic order.
  std::vector<Simplex> faces(std::size_t dim) const;
  /// Every simplex, ordered by dimension then lexicographically.
  std::vector<Simplex> allSimplices() const;
  std::size_t dimension() const;

  /// Connectivity of the 1-skeleton.
  bool connected() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Simplex> maximal_;
};

} // namespace catmon
