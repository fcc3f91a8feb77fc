#pragma once

// Enumerators and brute-force oracles shared by the tests. Nothing here
// calls into the algorithms under test except to build inputs.

#include "catmon/catalog.hpp"
#include "catmon/category.hpp"
#include "catmon/complex.hpp"
#include "catmon/interval.hpp"
#include "catmon/poset.hpp"
#include "catmon/universal_monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace catmon;

// Strict order on {0..n-1} as a bit mask over ordered pairs i*n+j.
using Relation = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::vector<std::string> numberNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::to_string(i));
  return names;
}

inline Poset posetFrom(std::size_t n, const Relation &less) {
  return Poset::fromRelation(numberNames(n), less);
}

// Transitive strict orders with i < j only for i < j as integers.
inline std::vector<Relation> naturalOrders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  std::vector<Relation> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<unsigned char> m(n * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1)
        m[pairs[k].first * n + pairs[k].second] = 1;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = i + 1; j < n && transitive; ++j)
        if (m[i * n + j])
          for (std::size_t k = j + 1; k < n; ++k)
            if (m[j * n + k] && !m[i * n + k]) {
              transitive = false;
              break;
            }
    if (!transitive)
      continue;
    Relation r;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1)
        r.push_back(pairs[k]);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<unsigned char> matrixOf(std::size_t n, const Relation &r) {
  std::vector<unsigned char> m(n * n, 0);
  for (auto [i, j] : r)
    m[i * n + j] = 1;
  return m;
}

inline Relation relabel(const Relation &r, const std::vector<std::size_t> &perm) {
  Relation out;
  for (auto [i, j] : r)
    out.emplace_back(perm[i], perm[j]);
  std::sort(out.begin(), out.end());
  return out;
}

// Every strict order on {0..n-1}: relabelings of the natural ones.
inline std::vector<Relation> labeledOrders(std::size_t n) {
  std::set<Relation> seen;
  std::vector<std::size_t> perm(n);
  for (const auto &r : naturalOrders(n)) {
    std::iota(perm.begin(), perm.end(), 0);
    do
      seen.insert(relabel(r, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {seen.begin(), seen.end()};
}

// One representative per isomorphism class (least relabeled relation).
inline std::vector<Relation> orderTypes(std::size_t n) {
  std::set<Relation> reps;
  std::vector<std::size_t> perm(n);
  for (const auto &r : naturalOrders(n)) {
    Relation best = r;
    std::sort(best.begin(), best.end());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Relation c = relabel(r, perm);
      if (c < best)
        best = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

inline bool hasLeast(std::size_t n, const Relation &r) {
  auto m = matrixOf(n, r);
  for (std::size_t x = 0; x < n; ++x) {
    bool least = true;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && !m[x * n + y])
        least = false;
    if (least)
      return true;
  }
  return false;
}

// All complexes whose vertex set is exactly {0..n-1}, as lists of maximal
// simplices (vertex names "0".."n-1").
inline std::vector<std::vector<std::vector<std::string>>> complexesOn(std::size_t n) {
  std::vector<unsigned> subsets;
  for (unsigned s = 1; s < (1u << n); ++s)
    if (__builtin_popcount(s) >= 2)
      subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::vector<std::vector<std::string>>> out;
  std::vector<bool> in(1u << n, false);
  for (unsigned v = 0; v < n; ++v)
    in[1u << v] = true;
  auto emit = [&] {
    std::vector<std::vector<std::string>> maximal;
    for (unsigned s = 1; s < (1u << n); ++s) {
      if (!in[s])
        continue;
      bool isMax = true;
      for (unsigned v = 0; v < n && isMax; ++v)
        if (!(s >> v & 1) && in[s | (1u << v)])
          isMax = false;
      if (!isMax)
        continue;
      std::vector<std::string> simplex;
      for (unsigned v = 0; v < n; ++v)
        if (s >> v & 1)
          simplex.push_back(std::to_string(v));
      maximal.push_back(std::move(simplex));
    }
    out.push_back(std::move(maximal));
  };
  auto rec = [&](auto &&self, std::size_t k) -> void {
    if (k == subsets.size()) {
      emit();
      return;
    }
    unsigned s = subsets[k];
    self(self, k + 1);
    for (unsigned v = 0; v < n; ++v)
      if ((s >> v & 1) && !in[s & ~(1u << v)])
        return;
    in[s] = true;
    self(self, k + 1);
    in[s] = false;
  };
  rec(rec, 0);
  return out;
}

// Category of functions between small sets, generated by random maps and
// closed under composition. Returns false if it grows past maxArrows.
inline bool randomTransformationCategory(std::mt19937 &rng, std::size_t maxArrows,
                                         CategoryDescription &out) {
  std::uniform_int_distribution<int> objectsDist(1, 4);
  std::uniform_int_distribution<int> sizeDist(1, 3);
  const std::size_t objects = static_cast<std::size_t>(objectsDist(rng));
  std::vector<std::size_t> sizes;
  for (std::size_t o = 0; o < objects; ++o)
    sizes.push_back(static_cast<std::size_t>(sizeDist(rng)));

  struct Map {
    std::size_t src, tgt;
    std::vector<std::size_t> f;
    bool operator<(const Map &o) const {
      return std::tie(src, tgt, f) < std::tie(o.src, o.tgt, o.f);
    }
  };
  std::map<Map, std::size_t> index;
  std::vector<Map> maps;
  auto add = [&](Map m) {
    if (index.count(m))
      return;
    index.emplace(m, maps.size());
    maps.push_back(std::move(m));
  };
  for (std::size_t o = 0; o < objects; ++o) {
    Map id{o, o, {}};
    for (std::size_t i = 0; i < sizes[o]; ++i)
      id.f.push_back(i);
    add(id);
  }
  std::uniform_int_distribution<int> genDist(1, 4);
  const int generators = genDist(rng);
  for (int g = 0; g < generators; ++g) {
    std::size_t s = rng() % objects, t = rng() % objects;
    Map m{s, t, {}};
    for (std::size_t i = 0; i < sizes[s]; ++i)
      m.f.push_back(rng() % sizes[t]);
    add(m);
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        if (maps[a].tgt != maps[b].src)
          continue;
        Map c{maps[a].src, maps[b].tgt, {}};
        for (std::size_t x : maps[a].f)
          c.f.push_back(maps[b].f[x]);
        add(c);
        if (maps.size() > maxArrows)
          return false;
      }
  }
  out = CategoryDescription{};
  for (std::size_t o = 0; o < objects; ++o)
    out.objects.push_back("o" + std::to_string(o));
  auto nameOf = [&](std::size_t k) {
    return k < objects ? "id:o" + std::to_string(k) : "f" + std::to_string(k);
  };
  for (std::size_t k = objects; k < maps.size(); ++k)
    out.arrows.push_back({nameOf(k), "o" + std::to_string(maps[k].src),
                          "o" + std::to_string(maps[k].tgt)});
  for (std::size_t a = objects; a < maps.size(); ++a)
    for (std::size_t b = objects; b < maps.size(); ++b) {
      if (maps[a].tgt != maps[b].src)
        continue;
      Map c{maps[a].src, maps[b].tgt, {}};
      for (std::size_t x : maps[a].f)
        c.f.push_back(maps[b].f[x]);
      out.composites.push_back({nameOf(a), nameOf(b), nameOf(index.at(c))});
    }
  return true;
}

// A mix of transformation categories, interval categories and the catalog.
inline std::vector<FiniteCategory> randomCategories(std::size_t count, std::uint32_t seed,
                                                    std::size_t maxArrows = 20) {
  std::mt19937 rng(seed);
  std::vector<FiniteCategory> out;
  out.push_back(catalog::c6());
  out.push_back(catalog::cancellationCounterexample());
  out.push_back(catalog::cyclicGroupOfOrderTwo());
  out.push_back(catOfPoset(catalog::diamond()));
  std::vector<Relation> small = naturalOrders(4);
  while (out.size() < count) {
    if (rng() % 4 == 0) {
      const auto &r = small[rng() % small.size()];
      out.push_back(catOfPoset(posetFrom(4, r)));
      continue;
    }
    CategoryDescription d;
    if (randomTransformationCategory(rng, maxArrows, d))
      out.push_back(validateCategory(d));
  }
  return out;
}

// Reduction by rewriting a uniformly random redex each time.
inline std::vector<ArrowId> randomOrderReduce(const FiniteCategory &s,
                                              std::vector<ArrowId> seq, std::mt19937 &rng) {
  for (;;) {
    std::vector<std::pair<std::size_t, bool>> redexes; // position, isCompose
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (s.isIdentity(seq[i]))
        redexes.emplace_back(i, false);
      if (i + 1 < seq.size() && s.target(seq[i]) == s.source(seq[i + 1]))
        redexes.emplace_back(i, true);
    }
    if (redexes.empty())
      return seq;
    auto [pos, compose] = redexes[rng() % redexes.size()];
    if (compose) {
      seq[pos] = *s.compose(seq[pos], seq[pos + 1]);
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    } else {
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
}

// Brute-force arrow-level checks, straight from the definitions.
inline bool bruteConical(const FiniteCategory &s) {
  for (std::size_t f = s.objectCount(); f < s.arrowCount(); ++f)
    for (std::size_t g = s.objectCount(); g < s.arrowCount(); ++g)
      if (s.target(ArrowId(f)) == s.source(ArrowId(g)) &&
          s.isIdentity(*s.compose(ArrowId(f), ArrowId(g))))
        return false;
  return true;
}

inline bool bruteCancellative(Side side, const FiniteCategory &s) {
  const std::size_t n = s.arrowCount();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        auto ax = side == Side::Left ? s.compose(ArrowId(a), ArrowId(x))
                                     : s.compose(ArrowId(x), ArrowId(a));
        auto ay = side == Side::Left ? s.compose(ArrowId(a), ArrowId(y))
                                     : s.compose(ArrowId(y), ArrowId(a));
        if (ax && ay && *ax == *ay)
          return false;
      }
  return true;
}

// Divisibility among a finite, multiplicatively closed-enough set of
// elements, obtained from the multiplication table alone: d divides y on
// the left iff d * z = y for some listed z.
struct DivisorTable {
  std::vector<ReducedSeq> elements;
  std::map<ReducedSeq, std::size_t> index;
  std::vector<std::vector<bool>> leftDivides;  // [d][y]
  std::vector<std::vector<bool>> rightDivides; // [d][y]

  DivisorTable(const FiniteCategory &s, std::size_t maxLength)
      : elements(enumerateElements(s, maxLength)) {
    const std::size_t n = elements.size();
    for (std::size_t i = 0; i < n; ++i)
      index.emplace(elements[i], i);
    leftDivides.assign(n, std::vector<bool>(n, false));
    rightDivides.assign(n, std::vector<bool>(n, false));
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t z = 0; z < n; ++z) {
        auto it = index.find(multiply(s, elements[d], elements[z]));
        if (it == index.end())
          continue;
        leftDivides[d][it->second] = true;
        rightDivides[z][it->second] = true;
      }
  }

  // Greatest common divisor of y1, y2 among the listed elements, if any.
  std::optional<std::size_t> gcd(Side side, std::size_t y1, std::size_t y2) const {
    const auto &div = side == Side::Left ? leftDivides : rightDivides;
    std::vector<std::size_t> common;
    for (std::size_t d = 0; d < elements.size(); ++d)
      if (div[d][y1] && div[d][y2])
        common.push_back(d);
    for (std::size_t g : common) {
      bool greatest = true;
      for (std::size_t c : common)
        if (!div[c][g]) {
          greatest = false;
          break;
        }
      if (greatest)
        return g;
    }
    return std::nullopt;
  }
};

} // namespace testing
