#include "catmon/group_presentation.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace catmon {

std::optional<std::size_t>
GroupPresentation::findGenerator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name)
      return i;
  return std::nullopt;
}

void GroupPresentation::validate() const {
  for (const auto &r : relators)
    for (const auto &l : r)
      if (l.generator >= generators.size() ||
          (l.exponent != 1 && l.exponent != -1))
        throw Error(ErrorKind::UnknownGenerator,
                    "relator letter outside the generator list");
}

GroupRelator inverse(const GroupRelator &w) {
  GroupRelator out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->generator, -it->exponent});
  return out;
}

GroupRelator freelyReduce(const GroupRelator &w) {
  GroupRelator out;
  out.reserve(w.size());
  for (const auto &l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupRelator cyclicallyReduce(const GroupRelator &w) {
  GroupRelator r = freelyReduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo].generator == r[hi - 1].generator &&
         r[lo].exponent == -r[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  return GroupRelator(r.begin() + static_cast<std::ptrdiff_t>(lo),
                      r.begin() + static_cast<std::ptrdiff_t>(hi));
}

GroupRelator canonicalRelator(const GroupRelator &w) {
  GroupRelator r = cyclicallyReduce(w);
  if (r.empty())
    return r;
  GroupRelator best = r;
  for (const GroupRelator &base : {r, inverse(r)}) {
    GroupRelator rot = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best)
        best = rot;
    }
  }
  return best;
}

std::string formatRelator(const GroupPresentation &p, const GroupRelator &w) {
  if (w.empty())
    return "1";
  std::string out;
  for (const auto &l : w) {
    if (!out.empty())
      out += ' ';
    out += p.generators[l.generator];
    if (l.exponent < 0)
      out += "^-1";
  }
  return out;
}

std::size_t relationMatrixRank(const GroupPresentation &p) {
  const std::size_t cols = p.generators.size();
  std::vector<std::vector<long long>> rows;
  for (const auto &r : p.relators) {
    std::vector<long long> row(cols, 0);
    for (const auto &l : r)
      row[l.generator] += l.exponent;
    rows.push_back(std::move(row));
  }
  // Integer row reduction; rows are kept primitive to bound growth.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0)
        continue;
      long long a = rows[rank][c];
      long long b = rows[i][c];
      long long g = std::gcd(a, b);
      long long content = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = rows[i][j] * (a / g) - rows[rank][j] * (b / g);
        content = std::gcd(content, rows[i][j]);
      }
      if (content > 1)
        for (auto &x : rows[i])
          x /= content;
    }
    ++rank;
  }
  return rank;
}

std::size_t abelianizationRank(const GroupPresentation &p) {
  return p.generators.size() - relationMatrixRank(p);
}

namespace {

void normalizeRelators(std::vector<GroupRelator> &relators) {
  std::vector<GroupRelator> out;
  for (const auto &r : relators) {
    GroupRelator c = canonicalRelator(r);
    if (!c.empty())
      out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const GroupRelator &a, const GroupRelator &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  relators = std::move(out);
}

} // namespace

GroupPresentation simplifyPresentation(const GroupPresentation &p,
                                       const std::set<std::size_t> &killed) {
  p.validate();
  std::vector<bool> alive(p.generators.size(), true);
  for (std::size_t g : killed)
    if (g < alive.size())
      alive[g] = false;

  std::vector<GroupRelator> relators;
  for (const auto &r : p.relators) {
    GroupRelator kept;
    for (const auto &l : r)
      if (alive[l.generator])
        kept.push_back(l);
    relators.push_back(std::move(kept));
  }
  normalizeRelators(relators);

  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> choice; // relator, position
    for (std::size_t ri = 0; ri < relators.size() && !choice; ++ri) {
      const auto &r = relators[ri];
      std::vector<std::size_t> count(p.generators.size(), 0);
      for (const auto &l : r)
        ++count[l.generator];
      for (std::size_t pos = 0; pos < r.size(); ++pos)
        if (count[r[pos].generator] == 1) {
          choice = std::pair{ri, pos};
          break;
        }
    }
    if (!choice)
      break;

    auto [ri, pos] = *choice;
    GroupRelator r = relators[ri];
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    // r = g^e w = 1, so g = w^-1 when e = 1 and g = w when e = -1.
    const GroupLetter head = r.front();
    GroupRelator rest(r.begin() + 1, r.end());
    GroupRelator value = head.exponent > 0 ? inverse(rest) : rest;
    GroupRelator valueInverse = inverse(value);

    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(ri));
    for (auto &other : relators) {
      GroupRelator next;
      for (const auto &l : other) {
        if (l.generator != head.generator) {
          next.push_back(l);
          continue;
        }
        const GroupRelator &piece = l.exponent > 0 ? value : valueInverse;
        next.insert(next.end(), piece.begin(), piece.end());
      }
      other = std::move(next);
    }
    alive[head.generator] = false;
    normalizeRelators(relators);
  }

  GroupPresentation out;
  std::vector<std::size_t> renumber(p.generators.size(), 0);
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    if (alive[g]) {
      renumber[g] = out.generators.size();
      out.generators.push_back(p.generators[g]);
    }
  for (const auto &r : relators) {
    GroupRelator mapped;
    for (const auto &l : r)
      mapped.push_back({renumber[l.generator], l.exponent});
    out.relators.push_back(canonicalRelator(mapped));
  }
  normalizeRelators(out.relators);
  return out;
}

} // namespace catmon
