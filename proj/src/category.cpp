#include "catmon/category.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace catmon {

namespace {

std::uint64_t nextUid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

bool sortedContains(std::span<const ArrowId> list, ArrowId a) {
  return std::binary_search(list.begin(), list.end(), a);
}

} // namespace

const char *toString(Side side) {
  return side == Side::Left ? "left" : "right";
}

std::optional<ObjectId> FiniteCategory::findObject(std::string_view name) const {
  auto it = objectByName_.find(std::string(name));
  if (it == objectByName_.end())
    return std::nullopt;
  return it->second;
}

std::optional<ArrowId> FiniteCategory::findArrow(std::string_view name) const {
  auto it = arrowByName_.find(std::string(name));
  if (it != arrowByName_.end())
    return it->second;
  if (name.starts_with("id:")) {
    if (auto o = findObject(name.substr(3)))
      return identity(*o);
  }
  return std::nullopt;
}

std::optional<ArrowId> FiniteCategory::compose(ArrowId f, ArrowId g) const {
  if (target(f) != source(g))
    return std::nullopt;
  std::uint32_t h = compRow_[toIndex(f)][outPosition_[toIndex(g)]];
  if (h == kUndefined)
    return std::nullopt;
  return ArrowId(h);
}

std::vector<ArrowId> FiniteCategory::homSet(ObjectId from, ObjectId to) const {
  std::vector<ArrowId> result;
  for (ArrowId a : arrowsFrom(from))
    if (target(a) == to)
      result.push_back(a);
  return result;
}

CategoryDescription FiniteCategory::describe() const {
  CategoryDescription d;
  d.objects = objectNames_;
  for (std::size_t o = 0; o < objectCount(); ++o) {
    const std::string &name = arrows_[o].name;
    if (name != "id:" + objectNames_[o])
      d.identityNames[objectNames_[o]] = name;
  }
  for (std::size_t a = objectCount(); a < arrowCount(); ++a)
    d.arrows.push_back({arrows_[a].name, objectNames_[toIndex(arrows_[a].source)],
                        objectNames_[toIndex(arrows_[a].target)]});
  for (std::size_t f = objectCount(); f < arrowCount(); ++f) {
    for (ArrowId g : arrowsFrom(target(ArrowId(f)))) {
      if (isIdentity(g))
        continue;
      ArrowId h = *compose(ArrowId(f), g);
      d.composites.push_back({arrows_[f].name, arrowName(g), arrowName(h)});
    }
  }
  return d;
}

void FiniteCategory::computeDerivedData() {
  const std::size_t n = arrowCount();
  leftDivisors_.assign(n, {});
  rightDivisors_.assign(n, {});
  conical_ = true;
  leftCancellative_ = true;
  rightCancellative_ = true;

  // Right cancellativity: for each g, f -> f;g must be injective on the
  // arrows entering source(g).
  std::vector<std::uint32_t> seenBy(n, kUndefined);
  for (std::size_t f = 0; f < n; ++f) {
    ArrowId fa = ArrowId(f);
    for (ArrowId g : arrowsFrom(target(fa))) {
      ArrowId h = *compose(fa, g);
      leftDivisors_[toIndex(h)].push_back(fa);
      rightDivisors_[toIndex(h)].push_back(g);
      if (isIdentity(h) && !isIdentity(fa))
        conical_ = false;
    }
  }
  for (auto &list : leftDivisors_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (auto &list : rightDivisors_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // Left cancellativity of a: x -> a;x injective.
  for (std::size_t a = 0; a < n && leftCancellative_; ++a) {
    ArrowId aa = ArrowId(a);
    for (ArrowId x : arrowsFrom(target(aa))) {
      ArrowId h = *compose(aa, x);
      if (seenBy[toIndex(h)] == a) {
        leftCancellative_ = false;
        break;
      }
      seenBy[toIndex(h)] = static_cast<std::uint32_t>(a);
    }
  }
  std::fill(seenBy.begin(), seenBy.end(), kUndefined);
  for (std::size_t a = 0; a < n && rightCancellative_; ++a) {
    ArrowId aa = ArrowId(a);
    for (ArrowId x : arrowsInto(source(aa))) {
      ArrowId h = *compose(x, aa);
      if (seenBy[toIndex(h)] == a) {
        rightCancellative_ = false;
        break;
      }
      seenBy[toIndex(h)] = static_cast<std::uint32_t>(a);
    }
  }
}

FiniteCategory validateCategory(const CategoryDescription &raw,
                                const ValidateOptions &options) {
  FiniteCategory s;
  const std::size_t objectCount = raw.objects.size();
  const std::size_t total = objectCount + raw.arrows.size();
  if (total > options.maxArrows)
    throw Error(ErrorKind::SizeLimit,
                "category has " + std::to_string(total) +
                    " arrows, above the limit of " +
                    std::to_string(options.maxArrows));

  for (std::size_t i = 0; i < objectCount; ++i) {
    const std::string &name = raw.objects[i];
    if (name.empty())
      throw Error(ErrorKind::Parse, "empty object name");
    if (!s.objectByName_.emplace(name, ObjectId(i)).second)
      throw Error(ErrorKind::DuplicateName, "duplicate object '" + name + "'");
    s.objectNames_.push_back(name);
  }
  for (const auto &[obj, _] : raw.identityNames)
    if (!s.objectByName_.contains(obj))
      throw Error(ErrorKind::UnknownObject,
                  "identity declared for unknown object '" + obj + "'");

  auto objectOf = [&](const std::string &name) {
    auto it = s.objectByName_.find(name);
    if (it == s.objectByName_.end())
      throw Error(ErrorKind::UnknownObject, "unknown object '" + name + "'");
    return it->second;
  };
  auto addArrow = [&](const std::string &name, ObjectId src, ObjectId tgt) {
    if (name.empty())
      throw Error(ErrorKind::Parse, "empty arrow name");
    ArrowId id = ArrowId(s.arrows_.size());
    if (!s.arrowByName_.emplace(name, id).second)
      throw Error(ErrorKind::DuplicateName, "duplicate arrow '" + name + "'");
    s.arrows_.push_back({name, src, tgt});
  };

  for (std::size_t i = 0; i < objectCount; ++i) {
    const std::string &obj = raw.objects[i];
    auto it = raw.identityNames.find(obj);
    addArrow(it == raw.identityNames.end() ? "id:" + obj : it->second,
             ObjectId(i), ObjectId(i));
  }
  for (const auto &arrow : raw.arrows)
    addArrow(arrow.name, objectOf(arrow.source), objectOf(arrow.target));

  const std::size_t n = s.arrows_.size();
  s.outgoing_.assign(objectCount, {});
  s.incoming_.assign(objectCount, {});
  s.outPosition_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto &rec = s.arrows_[a];
    s.outPosition_[a] =
        static_cast<std::uint32_t>(s.outgoing_[toIndex(rec.source)].size());
    s.outgoing_[toIndex(rec.source)].push_back(ArrowId(a));
    s.incoming_[toIndex(rec.target)].push_back(ArrowId(a));
  }
  s.compRow_.resize(n);
  for (std::size_t f = 0; f < n; ++f)
    s.compRow_[f].assign(s.outgoing_[toIndex(s.arrows_[f].target)].size(),
                         FiniteCategory::kUndefined);

  auto slot = [&](ArrowId f, ArrowId g) -> std::uint32_t & {
    return s.compRow_[toIndex(f)][s.outPosition_[toIndex(g)]];
  };
  // Identity laws are implicit.
  for (std::size_t o = 0; o < objectCount; ++o) {
    ArrowId e = ArrowId(o);
    for (ArrowId g : s.outgoing_[o])
      slot(e, g) = static_cast<std::uint32_t>(toIndex(g));
    for (ArrowId f : s.incoming_[o])
      slot(f, e) = static_cast<std::uint32_t>(toIndex(f));
  }

  auto arrowOf = [&](const std::string &name) {
    auto it = s.arrowByName_.find(name);
    if (it == s.arrowByName_.end())
      throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + name + "'");
    return it->second;
  };
  for (const auto &c : raw.composites) {
    ArrowId f = arrowOf(c.first);
    ArrowId g = arrowOf(c.second);
    ArrowId h = arrowOf(c.result);
    const std::string entry =
        "comp " + c.first + " " + c.second + " " + c.result;
    if (s.target(f) != s.source(g))
      throw Error(ErrorKind::BadComposability,
                  entry + ": target of '" + c.first +
                      "' differs from source of '" + c.second + "'");
    if (s.source(h) != s.source(f) || s.target(h) != s.target(g))
      throw Error(ErrorKind::BadComposability,
                  entry + ": endpoints of '" + c.result +
                      "' do not match the composable pair");
    std::uint32_t &cell = slot(f, g);
    if (s.isIdentity(f) || s.isIdentity(g)) {
      if (cell != toIndex(h))
        throw Error(ErrorKind::BadIdentity,
                    entry + ": contradicts the identity law");
      continue;
    }
    if (cell != FiniteCategory::kUndefined && cell != toIndex(h))
      throw Error(ErrorKind::BadComposability,
                  entry + ": conflicts with an earlier entry");
    cell = static_cast<std::uint32_t>(toIndex(h));
  }

  for (std::size_t f = 0; f < n; ++f) {
    for (ArrowId g : s.outgoing_[toIndex(s.arrows_[f].target)]) {
      if (slot(ArrowId(f), g) == FiniteCategory::kUndefined)
        throw Error(ErrorKind::MissingComposite,
                    "no composite given for '" + s.arrows_[f].name + "' then '" +
                        s.arrowName(g) + "'");
    }
  }

  for (std::size_t fi = 0; fi < n; ++fi) {
    ArrowId f = ArrowId(fi);
    for (ArrowId g : s.outgoing_[toIndex(s.target(f))]) {
      ArrowId fg = *s.compose(f, g);
      for (ArrowId h : s.outgoing_[toIndex(s.target(g))]) {
        ArrowId left = *s.compose(fg, h);
        ArrowId right = *s.compose(f, *s.compose(g, h));
        if (left != right)
          throw Error(ErrorKind::AssociativityViolation,
                      "(" + s.arrowName(f) + " " + s.arrowName(g) + ") " +
                          s.arrowName(h) + " = " + s.arrowName(left) +
                          " but " + s.arrowName(f) + " (" + s.arrowName(g) +
                          " " + s.arrowName(h) + ") = " + s.arrowName(right));
      }
    }
  }

  s.computeDerivedData();
  s.uid_ = nextUid();
  return s;
}

bool isConical(const FiniteCategory &s) { return s.conical(); }
bool isLeftCancellative(const FiniteCategory &s) { return s.leftCancellative(); }
bool isRightCancellative(const FiniteCategory &s) {
  return s.rightCancellative();
}

std::optional<ArrowId> catDivides(Side side, ArrowId a, ArrowId b,
                                  const FiniteCategory &s) {
  if (side == Side::Left) {
    if (s.source(a) != s.source(b))
      return std::nullopt;
    for (ArrowId x : s.arrowsFrom(s.target(a)))
      if (s.target(x) == s.target(b) && *s.compose(a, x) == b)
        return x;
  } else {
    if (s.target(a) != s.target(b))
      return std::nullopt;
    for (ArrowId x : s.arrowsInto(s.source(a)))
      if (s.source(x) == s.source(b) && *s.compose(x, a) == b)
        return x;
  }
  return std::nullopt;
}

namespace {

std::span<const ArrowId> divisorsOf(Side side, ArrowId b,
                                    const FiniteCategory &s) {
  return side == Side::Left ? s.leftDivisorsOf(b) : s.rightDivisorsOf(b);
}

// Among `candidates`, the first one divisible by all the others.
std::optional<ArrowId> greatestOf(Side side,
                                  const std::vector<ArrowId> &candidates,
                                  const FiniteCategory &s) {
  for (ArrowId d : candidates) {
    auto divs = divisorsOf(side, d, s);
    bool greatest = std::all_of(candidates.begin(), candidates.end(),
                                [&](ArrowId c) { return sortedContains(divs, c); });
    if (greatest)
      return d;
  }
  return std::nullopt;
}

void checkCommonEndpoint(Side side, std::span<const ArrowId> family,
                         const FiniteCategory &s) {
  for (ArrowId a : family) {
    if (side == Side::Left && s.source(a) != s.source(family.front()))
      throw Error(ErrorKind::SourceMismatch,
                  "'" + s.arrowName(a) + "' and '" +
                      s.arrowName(family.front()) + "' have different sources");
    if (side == Side::Right && s.target(a) != s.target(family.front()))
      throw Error(ErrorKind::TargetMismatch,
                  "'" + s.arrowName(a) + "' and '" +
                      s.arrowName(family.front()) + "' have different targets");
  }
}

} // namespace

std::optional<ArrowId> catGcdFamily(Side side, std::span<const ArrowId> family,
                                    const FiniteCategory &s) {
  if (family.empty())
    throw Error(ErrorKind::EmptyFamily, "gcd of an empty family");
  checkCommonEndpoint(side, family, s);
  auto first = divisorsOf(side, family.front(), s);
  std::vector<ArrowId> common(first.begin(), first.end());
  for (ArrowId a : family.subspan(1)) {
    auto divs = divisorsOf(side, a, s);
    std::vector<ArrowId> next;
    std::set_intersection(common.begin(), common.end(), divs.begin(),
                          divs.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return greatestOf(side, common, s);
}

std::optional<ArrowId> catGcd(Side side, ArrowId a, ArrowId b,
                              const FiniteCategory &s) {
  const ArrowId pair[] = {a, b};
  return catGcdFamily(side, pair, s);
}

std::optional<ArrowId> catLcm(Side side, ArrowId a, ArrowId b,
                              const FiniteCategory &s) {
  const ArrowId pair[] = {a, b};
  checkCommonEndpoint(side, pair, s);
  std::vector<ArrowId> multiples;
  auto candidates = side == Side::Left ? s.arrowsFrom(s.source(a))
                                       : s.arrowsInto(s.target(a));
  for (ArrowId m : candidates) {
    auto divs = divisorsOf(side, m, s);
    if (sortedContains(divs, a) && sortedContains(divs, b))
      multiples.push_back(m);
  }
  // The least multiple divides every other one.
  for (ArrowId m : multiples) {
    bool least = std::all_of(multiples.begin(), multiples.end(), [&](ArrowId c) {
      return sortedContains(divisorsOf(side, c, s), m);
    });
    if (least)
      return m;
  }
  return std::nullopt;
}

GcdCategoryReport isGcdCategory(const FiniteCategory &s) {
  GcdCategoryReport report;
  report.conical = s.conical();
  report.leftCancellative = s.leftCancellative();
  report.rightCancellative = s.rightCancellative();
  report.leftGcds = true;
  report.rightGcds = true;
  for (std::size_t o = 0; o < s.objectCount() && report.leftGcds; ++o) {
    auto out = s.arrowsFrom(ObjectId(o));
    for (std::size_t i = 0; i < out.size() && report.leftGcds; ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (!catGcd(Side::Left, out[i], out[j], s)) {
          report.leftGcds = false;
          report.leftFailure = {out[i], out[j]};
          break;
        }
  }
  for (std::size_t o = 0; o < s.objectCount() && report.rightGcds; ++o) {
    auto in = s.arrowsInto(ObjectId(o));
    for (std::size_t i = 0; i < in.size() && report.rightGcds; ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j)
        if (!catGcd(Side::Right, in[i], in[j], s)) {
          report.rightGcds = false;
          report.rightFailure = {in[i], in[j]};
          break;
        }
  }
  return report;
}

} // namespace catmon
