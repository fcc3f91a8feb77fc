#include "catmon/presented_monoid.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace catmon {

std::optional<std::size_t>
MonoidPresentation::findGenerator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name)
      return i;
  return std::nullopt;
}

bool MonoidPresentation::homogeneous() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const auto &r) { return r.first.size() == r.second.size(); });
}

void MonoidPresentation::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j])
        throw Error(ErrorKind::DuplicateName,
                    "generator '" + generators[i] + "' listed twice");
  for (const auto &[u, v] : relations)
    for (const MonoidWord *w : {&u, &v})
      for (std::size_t g : *w)
        if (g >= generators.size())
          throw Error(ErrorKind::UnknownGenerator, "relation uses an unknown generator");
}

MonoidWord parseMonoidWord(const MonoidPresentation &p, std::string_view text) {
  MonoidWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (auto g = p.findGenerator(token)) {
      w.push_back(*g);
      continue;
    }
    if (token == "1")
      continue;
    throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + token + "'");
  }
  return w;
}

std::string formatMonoidWord(const MonoidPresentation &p, const MonoidWord &w) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t g : w)
    out += (out.empty() ? "" : " ") + p.generators[g];
  return out;
}

namespace {

using Key = std::u32string;

Key toKey(const MonoidWord &w) { return Key(w.begin(), w.end()); }
MonoidWord fromKey(const Key &k) { return MonoidWord(k.begin(), k.end()); }

void requireHomogeneous(const MonoidPresentation &p) {
  p.validate();
  if (!p.homogeneous())
    throw Error(ErrorKind::NotHomogeneous,
                "presentation has a relation whose sides differ in length");
}

struct Rules {
  // Every relation in both directions.
  std::vector<std::pair<Key, Key>> rewrite;

  explicit Rules(const MonoidPresentation &p) {
    for (const auto &[u, v] : p.relations) {
      if (u == v)
        continue;
      rewrite.emplace_back(toKey(u), toKey(v));
      rewrite.emplace_back(toKey(v), toKey(u));
    }
  }
};

// Breadth-first orbit of w. Stops early once `stop` holds for some member.
template <class Stop>
std::vector<Key> orbit(const Key &w, const Rules &rules, std::size_t limit, Stop stop,
                       bool &stopped) {
  std::vector<Key> members{w};
  std::unordered_set<Key> seen{w};
  stopped = stop(w);
  for (std::size_t head = 0; head < members.size() && !stopped; ++head) {
    const Key current = members[head];
    for (const auto &[lhs, rhs] : rules.rewrite) {
      if (lhs.empty() || lhs.size() > current.size())
        continue;
      for (std::size_t pos = current.find(lhs); pos != Key::npos;
           pos = current.find(lhs, pos + 1)) {
        Key next = current;
        next.replace(pos, lhs.size(), rhs);
        if (!seen.insert(next).second)
          continue;
        if (members.size() >= limit)
          throw Error(ErrorKind::SizeLimit, "congruence class exceeds " +
                                                std::to_string(limit) + " words");
        members.push_back(next);
        if (stop(members.back())) {
          stopped = true;
          return members;
        }
      }
    }
  }
  return members;
}

std::vector<Key> fullOrbit(const Key &w, const Rules &rules, std::size_t limit) {
  bool stopped = false;
  return orbit(w, rules, limit, [](const Key &) { return false; }, stopped);
}

} // namespace

std::set<MonoidWord> congruenceClass(const MonoidWord &w, const MonoidPresentation &p,
                                     std::size_t maxClassSize) {
  requireHomogeneous(p);
  for (std::size_t g : w)
    if (g >= p.generators.size())
      throw Error(ErrorKind::UnknownGenerator, "word uses an unknown generator");
  Rules rules(p);
  std::set<MonoidWord> out;
  for (const auto &k : fullOrbit(toKey(w), rules, maxClassSize))
    out.insert(fromKey(k));
  return out;
}

bool equalInMonoid(const MonoidWord &u, const MonoidWord &v, const MonoidPresentation &p) {
  requireHomogeneous(p);
  if (u.size() != v.size())
    return false;
  Rules rules(p);
  const Key target = toKey(v);
  bool found = false;
  orbit(toKey(u), rules, kDefaultClassLimit,
        [&](const Key &k) { return k == target; }, found);
  return found;
}

AtomsReport atoms(const MonoidPresentation &p) {
  requireHomogeneous(p);
  Rules rules(p);
  AtomsReport report;
  std::vector<bool> placed(p.generators.size(), false);
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    auto members = fullOrbit(Key(1, static_cast<char32_t>(g)), rules, kDefaultClassLimit);
    if (std::all_of(members.begin(), members.end(),
                    [](const Key &k) { return k.size() == 1; }))
      report.atoms.push_back(g);
    if (placed[g])
      continue;
    std::vector<std::size_t> group;
    for (const auto &k : members)
      if (k.size() == 1) {
        group.push_back(k.front());
        placed[k.front()] = true;
      }
    std::sort(group.begin(), group.end());
    report.classes.push_back(std::move(group));
  }
  return report;
}

std::optional<MonoidWord> commonRightMultiple(const std::vector<MonoidWord> &xs,
                                              const MonoidPresentation &p,
                                              std::size_t maxLength) {
  requireHomogeneous(p);
  if (xs.empty())
    return MonoidWord{};
  for (const auto &x : xs)
    for (std::size_t g : x)
      if (g >= p.generators.size())
        throw Error(ErrorKind::UnknownGenerator, "word uses an unknown generator");
  Rules rules(p);
  std::size_t longest = 0;
  for (const auto &x : xs)
    longest = std::max(longest, x.size());
  if (longest > maxLength)
    return std::nullopt;

  std::vector<Key> prefixes;
  for (const auto &x : xs)
    prefixes.push_back(toKey(x));

  // Each frontier entry is a congruence class, kept as its least member, of
  // the words x0 z with z of the current length. Every word already placed
  // in a class maps to that class's least member.
  std::unordered_map<Key, Key> classOf;
  auto canonical = [&](const Key &w) -> std::pair<Key, std::vector<Key>> {
    if (auto it = classOf.find(w); it != classOf.end())
      return {it->second, {}};
    auto members = fullOrbit(w, rules, kDefaultClassLimit);
    Key least = *std::min_element(members.begin(), members.end());
    for (const auto &m : members)
      classOf.emplace(m, least);
    return {least, std::move(members)};
  };
  std::map<Key, std::vector<Key>> frontier;
  {
    auto [least, members] = canonical(prefixes.front());
    frontier.emplace(least, std::move(members));
  }
  for (std::size_t len = xs.front().size(); len <= maxLength; ++len) {
    if (len >= longest) {
      for (const auto &[least, members] : frontier) {
        bool all = true;
        for (const auto &x : prefixes) {
          all = std::any_of(members.begin(), members.end(), [&](const Key &m) {
            return m.compare(0, x.size(), x) == 0;
          });
          if (!all)
            break;
        }
        if (all)
          return fromKey(least);
      }
    }
    if (len == maxLength)
      break;
    std::map<Key, std::vector<Key>> next;
    for (const auto &[least, members] : frontier)
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        Key w = least;
        w.push_back(static_cast<char32_t>(g));
        auto it = classOf.find(w);
        if (it != classOf.end()) {
          if (!next.count(it->second))
            next.emplace(it->second, fullOrbit(it->second, rules, kDefaultClassLimit));
          continue;
        }
        auto [c, m] = canonical(w);
        next.emplace(c, std::move(m));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

M6Report verifyM6Embedding(std::size_t maxLength) {
  MonoidPresentation m6;
  m6.generators = {"a", "b", "c", "d", "e", "f"};
  // ae = cb, da = bf
  m6.relations = {{{0, 4}, {2, 1}}, {{3, 0}, {1, 5}}};
  const std::vector<std::string> image = {"a", "b", "ax", "by", "xb", "ya"};
  auto apply = [&](const Key &w) {
    std::string out;
    for (char32_t g : w)
      out += image[g];
    return out;
  };

  M6Report report;
  report.maxLength = maxLength;
  report.relationsHold = true;
  for (const auto &[u, v] : m6.relations) {
    std::string lhs = apply(toKey(u));
    std::string rhs = apply(toKey(v));
    report.relationImages.emplace_back(lhs, rhs);
    if (lhs != rhs)
      report.relationsHold = false;
  }

  Rules rules(m6);
  std::unordered_map<Key, std::size_t> classIndex;
  std::vector<Key> representatives;
  std::map<std::string, std::size_t> imageOwner;
  report.injective = true;
  std::vector<Key> level{Key{}};
  for (std::size_t len = 0; len <= maxLength && report.injective; ++len) {
    for (const auto &w : level) {
      if (classIndex.count(w))
        continue;
      auto members = fullOrbit(w, rules, kDefaultClassLimit);
      const std::size_t id = representatives.size();
      representatives.push_back(w);
      const std::string img = apply(w);
      for (const auto &m : members) {
        classIndex.emplace(m, id);
        if (apply(m) != img)
          report.relationsHold = false;
      }
      auto [it, fresh] = imageOwner.emplace(img, id);
      if (!fresh) {
        report.injective = false;
        report.collision = std::pair{fromKey(representatives[it->second]), fromKey(w)};
        break;
      }
    }
    std::vector<Key> next;
    if (len < maxLength)
      for (const auto &w : level)
        for (std::size_t g = 0; g < m6.generators.size(); ++g) {
          Key e = w;
          e.push_back(static_cast<char32_t>(g));
          next.push_back(std::move(e));
        }
    level = std::move(next);
  }
  report.classesChecked = representatives.size();
  return report;
}

} // namespace catmon
