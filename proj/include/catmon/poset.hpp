#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace catmon {

/// Finite poset stored as its Hasse diagram, with the order relation cached.
/// Elements are addressed by their index in declaration order.
class Poset {
public:
  /// Rejects unknown elements, duplicate or redundant covers, and cycles.
  static Poset fromCovers(std::vector<std::string> elements,
                          const std::vector<std::pair<std::string, std::string>> &covers);
  /// Builds a poset from a strict order relation given as index pairs
  /// (x, y) meaning x < y; the relation is closed transitively and reduced
  /// to its covers. Cycles are rejected.
  static Poset fromRelation(std::vector<std::string> elements,
                            const std::vector<std::pair<std::size_t, std::size_t>> &less);

  std::size_t size() const { return names_.size(); }
  const std::string &name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string> &names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t indexOf(std::string_view name) const;

  bool leq(std::size_t x, std::size_t y) const { return order_[x * size() + y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const {
    return leq(x, y) || leq(y, x);
  }

  /// Covers (x, y) with x strictly below y and nothing in between, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>> &covers() const {
    return covers_;
  }

  std::vector<std::size_t> upSet(std::size_t a) const;
  std::vector<std::size_t> downSet(std::size_t a) const;
  bool isMinimal(std::size_t x) const;
  bool isMaximal(std::size_t x) const;
  std::optional<std::size_t> leastElement() const;

  /// Greatest lower bound of {x, y} inside `within`, if it exists there.
  std::optional<std::size_t> meetWithin(const std::vector<std::size_t> &within,
                                        std::size_t x, std::size_t y) const;
  std::optional<std::size_t> joinWithin(const std::vector<std::size_t> &within,
                                        std::size_t x, std::size_t y) const;

private:
  Poset() = default;
  void index();
  void computeCovers();

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> byName_;
  std::vector<unsigned char> order_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

} // namespace catmon
