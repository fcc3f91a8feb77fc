#include "catmon/complex.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace catmon {

SimplicialComplex SimplicialComplex::fromMaximalSimplices(
    const std::vector<std::vector<std::string>> &simplices) {
  SimplicialComplex k;
  std::set<std::string> names;
  for (const auto &s : simplices) {
    if (s.empty())
      throw Error(ErrorKind::Parse, "empty simplex");
    names.insert(s.begin(), s.end());
  }
  k.vertices_.assign(names.begin(), names.end());

  std::set<Simplex> unique;
  for (const auto &s : simplices) {
    Simplex idx;
    for (const auto &v : s)
      idx.push_back(*k.findVertex(v));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw Error(ErrorKind::Parse, "simplex repeats a vertex");
    if (!unique.insert(idx).second)
      throw Error(ErrorKind::RedundantSimplex, "simplex listed twice");
  }
  for (const auto &a : unique)
    for (const auto &b : unique)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        std::string text;
        for (std::size_t v : a)
          text += (text.empty() ? "" : " ") + k.vertices_[v];
        throw Error(ErrorKind::RedundantSimplex,
                    "simplex {" + text + "} is a face of another listed simplex");
      }
  k.maximal_.assign(unique.begin(), unique.end());
  return k;
}

std::optional<std::size_t>
SimplicialComplex::findVertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name)
    return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool SimplicialComplex::contains(const Simplex &s) const {
  if (s.empty())
    return false;
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Simplex &m) {
    return std::includes(m.begin(), m.end(), s.begin(), s.end());
  });
}

std::vector<Simplex> SimplicialComplex::faces(std::size_t dim) const {
  std::set<Simplex> out;
  const std::size_t k = dim + 1;
  for (const auto &m : maximal_) {
    if (m.size() < k)
      continue;
    // Enumerate k-subsets through a selection mask.
    std::vector<bool> pick(m.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Simplex s;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (pick[i])
          s.push_back(m[i]);
      out.insert(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

std::vector<Simplex> SimplicialComplex::allSimplices() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d <= dimension(); ++d) {
    auto f = faces(d);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::size_t SimplicialComplex::dimension() const {
  std::size_t d = 0;
  for (const auto &m : maximal_)
    d = std::max(d, m.size() - 1);
  return d;
}

bool SimplicialComplex::connected() const {
  const std::size_t n = vertexCount();
  if (n == 0)
    return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &m : maximal_)
    for (std::size_t v : m)
      parent[find(v)] = find(m.front());
  std::size_t root = find(0);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != root)
      return false;
  return true;
}

} // namespace catmon
