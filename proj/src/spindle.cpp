#include "catmon/spindle.hpp"

#include "catmon/error.hpp"

#include <algorithm>

namespace catmon {

namespace {

std::string intervalName(const Poset &p, std::size_t x, std::size_t y) {
  return "[" + p.name(x) + "," + p.name(y) + "]";
}

void chainsFrom(const Poset &p, std::size_t v, std::vector<std::size_t> &path,
                std::vector<std::vector<std::size_t>> &out) {
  const std::size_t x = path.back();
  if (x == v) {
    out.push_back(path);
    return;
  }
  for (const auto &[lo, hi] : p.covers())
    if (lo == x && p.leq(hi, v)) {
      path.push_back(hi);
      chainsFrom(p, v, path, out);
      path.pop_back();
    }
}

void requireInterval(const Poset &p, std::size_t u, std::size_t v) {
  if (u >= p.size() || v >= p.size())
    throw Error(ErrorKind::UnknownElement, "element index out of range");
  if (!p.less(u, v))
    throw Error(ErrorKind::NotComparable, p.name(u) + " is not below " + p.name(v));
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.less(u, z) && p.less(z, v))
      return;
  throw Error(ErrorKind::HeightTooSmall,
              "[" + p.name(u) + "," + p.name(v) + "] has height 1");
}

} // namespace

std::vector<std::vector<std::size_t>> maximalChains(const Poset &p, std::size_t u,
                                                    std::size_t v) {
  std::vector<std::vector<std::size_t>> out;
  if (!p.leq(u, v))
    return out;
  std::vector<std::size_t> path{u};
  chainsFrom(p, v, path, out);
  std::sort(out.begin(), out.end());
  return out;
}

SpindleCriteria spindleCriteria(const Poset &p, std::size_t u, std::size_t v) {
  requireInterval(p, u, v);
  std::vector<std::size_t> open;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.less(u, z) && p.less(z, v))
      open.push_back(z);

  SpindleCriteria c;
  c.comparabilityEquivalence = true;
  for (std::size_t x : open)
    for (std::size_t y : open)
      for (std::size_t z : open)
        if (p.comparable(x, y) && p.comparable(y, z) && !p.comparable(x, z))
          c.comparabilityEquivalence = false;

  auto chains = maximalChains(p, u, v);
  c.chainsDisjoint = true;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      // Middles are the entries strictly between the endpoints.
      const auto &a = chains[i];
      const auto &b = chains[j];
      for (std::size_t s = 1; s + 1 < a.size(); ++s)
        if (std::find(b.begin() + 1, b.end() - 1, a[s]) != b.end() - 1)
          c.chainsDisjoint = false;
    }
  return c;
}

std::optional<Spindle> detectSpindle(const Poset &p, std::size_t u, std::size_t v) {
  if (!spindleCriteria(p, u, v).comparabilityEquivalence)
    return std::nullopt;
  return Spindle{u, v, maximalChains(p, u, v)};
}

bool isExtremeSpindle(const Poset &p, const Spindle &sp) {
  return p.isMinimal(sp.u) && p.isMaximal(sp.v);
}

std::string chainArrowName(const Poset &p, const std::vector<std::size_t> &chain) {
  std::string name = "chain:";
  for (std::size_t i = 1; i + 1 < chain.size(); ++i)
    name += (i > 1 ? "," : "") + p.name(chain[i]);
  return name;
}

namespace {

void requireExtreme(const Poset &p, const Spindle &sp) {
  if (!isExtremeSpindle(p, sp))
    throw Error(ErrorKind::NotExtreme,
                "[" + p.name(sp.u) + "," + p.name(sp.v) + "] is not an extreme spindle");
}

} // namespace

FiniteCategory spindleCategory(const Poset &p, const Spindle &sp,
                               const ValidateOptions &options) {
  requireExtreme(p, sp);
  const std::size_t n = p.size();
  auto skip = [&](std::size_t x, std::size_t y) { return x == sp.u && y == sp.v; };

  CategoryDescription d;
  d.objects = p.names();
  for (std::size_t x = 0; x < n; ++x)
    d.identityNames[p.name(x)] = intervalName(p, x, x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(x, y) && !skip(x, y))
        d.arrows.push_back({intervalName(p, x, y), p.name(x), p.name(y)});
  for (const auto &chain : sp.chains)
    d.arrows.push_back({chainArrowName(p, chain), p.name(sp.u), p.name(sp.v)});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y))
        continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!p.less(y, z))
          continue;
        std::string result;
        if (!skip(x, z)) {
          result = intervalName(p, x, z);
        } else {
          for (const auto &chain : sp.chains)
            if (std::find(chain.begin() + 1, chain.end() - 1, y) != chain.end() - 1)
              result = chainArrowName(p, chain);
        }
        d.composites.push_back({intervalName(p, x, y), intervalName(p, y, z), result});
      }
    }
  return validateCategory(d, options);
}

MonoidPresentation spindleMonoidPresentation(const Poset &p, const Spindle &sp) {
  requireExtreme(p, sp);
  const std::size_t n = p.size();
  auto skip = [&](std::size_t x, std::size_t y) { return x == sp.u && y == sp.v; };
  MonoidPresentation pres;
  std::vector<std::vector<std::size_t>> gen(n, std::vector<std::size_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(x, y) && !skip(x, y)) {
        gen[x][y] = pres.generators.size();
        pres.generators.push_back(intervalName(p, x, y));
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (p.less(x, y) && p.less(y, z) && !skip(x, z))
          pres.relations.push_back({{gen[x][z]}, {gen[x][y], gen[y][z]}});
  return pres;
}

} // namespace catmon
