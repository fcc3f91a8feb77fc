#include "catmon/homotopy.hpp"

#include "catmon/error.hpp"
#include "catmon/interval.hpp"
#include "catmon/universal_monoid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace catmon {

std::string edgeGenerator(const SimplicialComplex &k, std::size_t x, std::size_t y) {
  if (x > y)
    std::swap(x, y);
  return "[" + k.vertexName(x) + "," + k.vertexName(y) + "]";
}

GroupPresentation floatingPresentation(const SimplicialComplex &k) {
  GroupPresentation p;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> generator;
  for (const auto &e : k.faces(1)) {
    generator[{e[0], e[1]}] = p.generators.size();
    p.generators.push_back(edgeGenerator(k, e[0], e[1]));
  }
  if (k.dimension() < 2)
    return p;
  auto letter = [&](std::size_t x, std::size_t y) -> GroupLetter {
    if (x < y)
      return {generator.at({x, y}), 1};
    return {generator.at({y, x}), -1};
  };
  std::set<GroupRelator> seen;
  for (const auto &t : k.faces(2)) {
    std::array<std::size_t, 3> v{t[0], t[1], t[2]};
    do {
      auto [x, y, z] = v;
      GroupLetter xz = letter(x, z);
      GroupRelator r{{xz.generator, -xz.exponent}, letter(x, y), letter(y, z)};
      GroupRelator c = canonicalRelator(r);
      if (!c.empty() && seen.insert(c).second)
        p.relators.push_back(r);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return p;
}

SpanningTree spanningTree(const SimplicialComplex &k) {
  if (!k.connected())
    throw Error(ErrorKind::Disconnected, "complex is not connected");
  SpanningTree tree;
  const std::size_t n = k.vertexCount();
  if (n == 0)
    return tree;
  std::vector<std::vector<std::size_t>> neighbours(n);
  for (const auto &e : k.faces(1)) {
    neighbours[e[0]].push_back(e[1]);
    neighbours[e[1]].push_back(e[0]);
  }
  for (auto &list : neighbours)
    std::sort(list.begin(), list.end());
  std::vector<bool> visited(n, false);
  std::deque<std::size_t> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : neighbours[x])
      if (!visited[y]) {
        visited[y] = true;
        tree.edges.emplace_back(x, y);
        queue.push_back(y);
      }
  }
  return tree;
}

GroupPresentation tietzeCollapse(const SimplicialComplex &k,
                                 const GroupPresentation &floating,
                                 const SpanningTree &tree) {
  std::set<std::size_t> killed;
  for (const auto &[x, y] : tree.edges) {
    auto g = floating.findGenerator(edgeGenerator(k, x, y));
    if (!g)
      throw Error(ErrorKind::UnknownGenerator,
                  "tree edge " + edgeGenerator(k, x, y) + " is not a generator");
    killed.insert(*g);
  }
  return simplifyPresentation(floating, killed);
}

FloatingDecomposition floatingDecomposition(const SimplicialComplex &k) {
  FloatingDecomposition d;
  auto tree = spanningTree(k);
  auto floating = floatingPresentation(k);
  d.edgeCount = floating.generators.size();
  d.treeEdgeCount = tree.edges.size();
  d.pi1 = tietzeCollapse(k, floating, tree);
  if (d.pi1.relators.empty()) {
    d.pi1FreeRank = d.pi1.generators.size();
    d.totalFreeRank = d.treeEdgeCount + *d.pi1FreeRank;
  }
  return d;
}

namespace {

void maximalChainsFrom(const Poset &p, std::vector<std::size_t> &path,
                       std::vector<std::vector<std::string>> &out) {
  const std::size_t x = path.back();
  bool extended = false;
  for (const auto &[lo, hi] : p.covers())
    if (lo == x) {
      extended = true;
      path.push_back(hi);
      maximalChainsFrom(p, path, out);
      path.pop_back();
    }
  if (!extended) {
    std::vector<std::string> names;
    for (std::size_t e : path)
      names.push_back(p.name(e));
    out.push_back(std::move(names));
  }
}

} // namespace

SimplicialComplex chainComplex(const Poset &p) {
  std::vector<std::vector<std::string>> chains;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.isMinimal(x)) {
      std::vector<std::size_t> path{x};
      maximalChainsFrom(p, path, chains);
    }
  return SimplicialComplex::fromMaximalSimplices(chains);
}

MeasValReport crossCheckMeasVal(const Poset &p) {
  MeasValReport r;
  r.floating = floatingDecomposition(chainComplex(p));
  r.universalGroupAbelianRank = abelianizationRank(universalGroupPresentation(catOfPoset(p)));
  r.agree = r.floating.totalFreeRank &&
            *r.floating.totalFreeRank == r.universalGroupAbelianRank;
  return r;
}

} // namespace catmon
