#include "catmon/interval.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace catmon {

namespace {

std::string intervalName(const Poset &p, std::size_t x, std::size_t y) {
  return "[" + p.name(x) + "," + p.name(y) + "]";
}

} // namespace

FiniteCategory catOfPoset(const Poset &p, const ValidateOptions &options) {
  CategoryDescription d;
  d.objects = p.names();
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    d.identityNames[p.name(x)] = intervalName(p, x, x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(x, y))
        d.arrows.push_back({intervalName(p, x, y), p.name(x), p.name(y)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y))
        continue;
      for (std::size_t z = 0; z < n; ++z)
        if (p.less(y, z))
          d.composites.push_back(
              {intervalName(p, x, y), intervalName(p, y, z), intervalName(p, x, z)});
    }
  return validateCategory(d, options);
}

std::optional<ArrowId> intervalArrow(const FiniteCategory &catP, std::size_t lo,
                                     std::size_t hi) {
  if (lo == hi)
    return catP.identity(ObjectId(lo));
  for (ArrowId a : catP.arrowsFrom(ObjectId(lo)))
    if (toIndex(catP.target(a)) == hi)
      return a;
  return std::nullopt;
}

GcdCriterionReport gcdCriterion(const Poset &p) {
  GcdCriterionReport r;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n && r.leftOK; ++a) {
    auto up = p.upSet(a);
    for (std::size_t i = 0; i < up.size() && r.leftOK; ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j)
        if (!p.meetWithin(up, up[i], up[j])) {
          r.leftOK = false;
          r.leftWitness = std::array{a, up[i], up[j]};
          break;
        }
  }
  for (std::size_t a = 0; a < n && r.rightOK; ++a) {
    auto down = p.downSet(a);
    for (std::size_t i = 0; i < down.size() && r.rightOK; ++i)
      for (std::size_t j = i + 1; j < down.size(); ++j)
        if (!p.joinWithin(down, down[i], down[j])) {
          r.rightOK = false;
          r.rightWitness = std::array{a, down[i], down[j]};
          break;
        }
  }
  return r;
}

Poset barycentric(const SimplicialComplex &k) {
  auto simplices = k.allSimplices();
  std::vector<std::string> names;
  for (const auto &s : simplices) {
    std::string name = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
      name += (i ? "," : "") + k.vertexName(s[i]);
    names.push_back(name + "}");
  }
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    for (std::size_t j = 0; j < simplices.size(); ++j)
      if (simplices[i].size() < simplices[j].size() &&
          std::includes(simplices[j].begin(), simplices[j].end(),
                        simplices[i].begin(), simplices[i].end()))
        less.emplace_back(i, j);
  return Poset::fromRelation(std::move(names), less);
}

IsotoneMap IsotoneMap::fromPairs(
    const Poset &from, const Poset &to,
    const std::vector<std::pair<std::string, std::string>> &pairs) {
  std::vector<std::optional<std::size_t>> img(from.size());
  for (const auto &[x, y] : pairs) {
    std::size_t i = from.indexOf(x);
    if (img[i])
      throw Error(ErrorKind::DuplicateName, "element '" + x + "' mapped twice");
    img[i] = to.indexOf(y);
  }
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (!img[i])
      throw Error(ErrorKind::UnknownElement,
                  "element '" + from.name(i) + "' has no image");
    images.push_back(*img[i]);
  }
  return fromImages(from, to, std::move(images));
}

IsotoneMap IsotoneMap::fromImages(const Poset &from, const Poset &to,
                                  std::vector<std::size_t> images) {
  if (images.size() != from.size())
    throw Error(ErrorKind::UnknownElement, "map does not cover the source poset");
  for (std::size_t y : images)
    if (y >= to.size())
      throw Error(ErrorKind::UnknownElement, "image outside the target poset");
  for (const auto &[x, y] : from.covers())
    if (!to.leq(images[x], images[y]))
      throw Error(ErrorKind::NotIsotone,
                  from.name(x) + " < " + from.name(y) + " but " +
                      to.name(images[x]) + " is not below " + to.name(images[y]));
  IsotoneMap f;
  f.images_ = std::move(images);
  return f;
}

bool IsotoneMap::injective() const {
  std::set<std::size_t> seen(images_.begin(), images_.end());
  return seen.size() == images_.size();
}

ReducedSeq applyIntervalFunctor(const IsotoneMap &f, const FiniteCategory &catP,
                                const FiniteCategory &catQ, const ReducedSeq &x) {
  if (x.categoryUid() != catP.uid())
    throw Error(ErrorKind::CategoryMismatch, "element belongs to a different category");
  std::vector<ArrowId> raw;
  for (ArrowId a : x.arrows()) {
    auto b = intervalArrow(catQ, f(toIndex(catP.source(a))), f(toIndex(catP.target(a))));
    if (!b)
      throw Error(ErrorKind::CategoryMismatch, "target category is not Cat(Q)");
    raw.push_back(*b);
  }
  return normalForm(catQ, raw);
}

GroupSpec freeGroupOn(const Poset &p) { return GroupSpec::free(p.names()); }

GroupWord embedFreeGroup(const FiniteCategory &catP, const ReducedSeq &x) {
  if (x.categoryUid() != catP.uid())
    throw Error(ErrorKind::CategoryMismatch, "element belongs to a different category");
  GroupRelator w;
  for (ArrowId a : x.arrows()) {
    w.push_back({toIndex(catP.source(a)), -1});
    w.push_back({toIndex(catP.target(a)), 1});
  }
  return {freelyReduce(w)};
}

LinearExtension linearExtension(const Poset &p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto &[x, y] : p.covers())
    ++indegree[y];
  auto byName = [&](std::size_t a, std::size_t b) { return p.name(a) > p.name(b); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(byName)> ready(byName);
  for (std::size_t x = 0; x < n; ++x)
    if (indegree[x] == 0)
      ready.push(x);
  LinearExtension ext;
  ext.position.assign(n, 0);
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    ext.position[x] = ext.order.size();
    ext.order.push_back(x);
    for (const auto &[lo, hi] : p.covers())
      if (lo == x && --indegree[hi] == 0)
        ready.push(hi);
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    ext.letters.push_back("s" + std::to_string(i) + std::to_string(i + 1));
  return ext;
}

std::vector<std::size_t> embedFreeMonoid(const LinearExtension &ext,
                                         const FiniteCategory &catP,
                                         const ReducedSeq &x) {
  if (x.categoryUid() != catP.uid())
    throw Error(ErrorKind::CategoryMismatch, "element belongs to a different category");
  std::vector<std::size_t> word;
  for (ArrowId a : x.arrows()) {
    std::size_t i = ext.position[toIndex(catP.source(a))];
    std::size_t j = ext.position[toIndex(catP.target(a))];
    for (std::size_t k = i; k < j; ++k)
      word.push_back(k);
  }
  return word;
}

std::string formatMonoidWord(const LinearExtension &ext,
                             const std::vector<std::size_t> &word) {
  if (word.empty())
    return "1";
  std::string out;
  for (std::size_t l : word)
    out += (out.empty() ? "" : " ") + ext.letters[l];
  return out;
}

} // namespace catmon
