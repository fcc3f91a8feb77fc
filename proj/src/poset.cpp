#include "catmon/poset.hpp"

#include "catmon/error.hpp"

#include <algorithm>

namespace catmon {

void Poset::index() {
  byName_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw Error(ErrorKind::Parse, "empty poset element name");
    if (!byName_.emplace(names_[i], i).second)
      throw Error(ErrorKind::DuplicateName,
                  "duplicate poset element '" + names_[i] + "'");
  }
}

namespace {

// Warshall closure of a strict relation held in `rel` (n x n, row-major).
void closeTransitively(std::vector<unsigned char> &rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j])
            rel[i * n + j] = 1;
}

} // namespace

void Poset::computeCovers() {
  const std::size_t n = size();
  covers_.clear();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!less(x, y))
        continue;
      bool between = false;
      for (std::size_t z = 0; z < n && !between; ++z)
        between = less(x, z) && less(z, y);
      if (!between)
        covers_.emplace_back(x, y);
    }
}

Poset Poset::fromCovers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>> &covers) {
  Poset p;
  p.names_ = std::move(elements);
  p.index();
  const std::size_t n = p.size();
  std::vector<unsigned char> strict(n * n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> given;
  for (const auto &[lo, hi] : covers) {
    std::size_t x = p.indexOf(lo);
    std::size_t y = p.indexOf(hi);
    if (x == y)
      throw Error(ErrorKind::CyclicOrder, "cover " + lo + " " + hi + " is a loop");
    if (strict[x * n + y])
      throw Error(ErrorKind::RedundantCover,
                  "cover " + lo + " " + hi + " listed twice");
    strict[x * n + y] = 1;
    given.emplace_back(x, y);
  }
  closeTransitively(strict, n);
  for (std::size_t x = 0; x < n; ++x)
    if (strict[x * n + x])
      throw Error(ErrorKind::CyclicOrder,
                  "cover relation has a cycle through '" + p.names_[x] + "'");
  p.order_ = strict;
  for (std::size_t x = 0; x < n; ++x)
    p.order_[x * n + x] = 1;
  p.computeCovers();
  for (const auto &[x, y] : given)
    if (!std::binary_search(p.covers_.begin(), p.covers_.end(),
                            std::pair{x, y}))
      throw Error(ErrorKind::RedundantCover,
                  "cover " + p.names_[x] + " " + p.names_[y] +
                      " is implied by a longer chain");
  return p;
}

Poset Poset::fromRelation(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::size_t, std::size_t>> &less) {
  Poset p;
  p.names_ = std::move(elements);
  p.index();
  const std::size_t n = p.size();
  std::vector<unsigned char> strict(n * n, 0);
  for (const auto &[x, y] : less) {
    if (x >= n || y >= n)
      throw Error(ErrorKind::UnknownElement, "relation index out of range");
    strict[x * n + y] = 1;
  }
  closeTransitively(strict, n);
  for (std::size_t x = 0; x < n; ++x)
    if (strict[x * n + x])
      throw Error(ErrorKind::CyclicOrder,
                  "relation has a cycle through '" + p.names_[x] + "'");
  p.order_ = strict;
  for (std::size_t x = 0; x < n; ++x)
    p.order_[x * n + x] = 1;
  p.computeCovers();
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  auto it = byName_.find(std::string(name));
  if (it == byName_.end())
    return std::nullopt;
  return it->second;
}

std::size_t Poset::indexOf(std::string_view name) const {
  if (auto i = find(name))
    return *i;
  throw Error(ErrorKind::UnknownElement,
              "unknown poset element '" + std::string(name) + "'");
}

std::vector<std::size_t> Poset::upSet(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(a, x))
      out.push_back(x);
  return out;
}

std::vector<std::size_t> Poset::downSet(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(x, a))
      out.push_back(x);
  return out;
}

bool Poset::isMinimal(std::size_t x) const {
  for (std::size_t y = 0; y < size(); ++y)
    if (less(y, x))
      return false;
  return true;
}

bool Poset::isMaximal(std::size_t x) const {
  for (std::size_t y = 0; y < size(); ++y)
    if (less(x, y))
      return false;
  return true;
}

std::optional<std::size_t> Poset::leastElement() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool least = true;
    for (std::size_t y = 0; y < size() && least; ++y)
      least = leq(x, y);
    if (least)
      return x;
  }
  return std::nullopt;
}

std::optional<std::size_t>
Poset::meetWithin(const std::vector<std::size_t> &within, std::size_t x,
                  std::size_t y) const {
  std::vector<std::size_t> lower;
  for (std::size_t z : within)
    if (leq(z, x) && leq(z, y))
      lower.push_back(z);
  for (std::size_t m : lower)
    if (std::all_of(lower.begin(), lower.end(),
                    [&](std::size_t z) { return leq(z, m); }))
      return m;
  return std::nullopt;
}

std::optional<std::size_t>
Poset::joinWithin(const std::vector<std::size_t> &within, std::size_t x,
                  std::size_t y) const {
  std::vector<std::size_t> upper;
  for (std::size_t z : within)
    if (leq(x, z) && leq(y, z))
      upper.push_back(z);
  for (std::size_t m : upper)
    if (std::all_of(upper.begin(), upper.end(),
                    [&](std::size_t z) { return leq(m, z); }))
      return m;
  return std::nullopt;
}

} // namespace catmon
