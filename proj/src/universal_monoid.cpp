#include "catmon/universal_monoid.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <sstream>

namespace catmon {

namespace detail {
struct SeqAccess {
  static ReducedSeq make(const FiniteCategory &s, std::vector<ArrowId> arrows) {
    return ReducedSeq(s.uid(), std::move(arrows));
  }
};
} // namespace detail

namespace {

using detail::SeqAccess;

void requireSameCategory(const FiniteCategory &s, const ReducedSeq &x) {
  if (x.categoryUid() != s.uid())
    throw Error(ErrorKind::CategoryMismatch,
                "element belongs to a different category");
}

bool isReduced(const FiniteCategory &s, std::span<const ArrowId> arrows) {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (toIndex(arrows[i]) >= s.arrowCount() || s.isIdentity(arrows[i]))
      return false;
    if (i + 1 < arrows.size() && s.compose(arrows[i], arrows[i + 1]))
      return false;
  }
  return true;
}

} // namespace

ReducedSeq ReducedSeq::unit(const FiniteCategory &s) {
  return SeqAccess::make(s, {});
}

ReducedSeq ReducedSeq::generator(const FiniteCategory &s, ArrowId a) {
  if (toIndex(a) >= s.arrowCount())
    throw Error(ErrorKind::UnknownArrow, "arrow index out of range");
  if (s.isIdentity(a))
    return unit(s);
  return SeqAccess::make(s, {a});
}

ReducedSeq ReducedSeq::fromReduced(const FiniteCategory &s,
                                   std::vector<ArrowId> arrows) {
  if (!isReduced(s, arrows))
    throw Error(ErrorKind::NotReduced, "sequence is not reduced");
  return SeqAccess::make(s, std::move(arrows));
}

Reduction reduce(const FiniteCategory &s, std::span<const ArrowId> raw) {
  for (ArrowId a : raw)
    if (toIndex(a) >= s.arrowCount())
      throw Error(ErrorKind::UnknownArrow, "arrow index out of range");

  // The stack always holds a reduced prefix, so the leftmost redex sits at
  // the boundary between the stack and the next input arrow.
  std::vector<ArrowId> stack;
  std::vector<RewriteStep> trace;
  for (ArrowId next : raw) {
    ArrowId x = next;
    for (;;) {
      if (!stack.empty()) {
        if (auto h = s.compose(stack.back(), x)) {
          trace.push_back({stack.size() - 1, RewriteStep::Kind::Compose});
          stack.pop_back();
          x = *h;
          continue;
        }
      }
      if (s.isIdentity(x))
        trace.push_back({stack.size(), RewriteStep::Kind::DropIdentity});
      else
        stack.push_back(x);
      break;
    }
  }
  return {SeqAccess::make(s, std::move(stack)), std::move(trace)};
}

ReducedSeq normalForm(const FiniteCategory &s, std::span<const ArrowId> raw) {
  return reduce(s, raw).result;
}

std::vector<ArrowId> applyStep(const FiniteCategory &s, std::vector<ArrowId> seq,
                               const RewriteStep &step) {
  const std::size_t p = step.position;
  if (step.kind == RewriteStep::Kind::DropIdentity) {
    if (p >= seq.size() || !s.isIdentity(seq[p]))
      throw Error(ErrorKind::Precondition, "no identity at step position");
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(p));
    return seq;
  }
  if (p + 1 >= seq.size())
    throw Error(ErrorKind::Precondition, "no composable pair at step position");
  auto h = s.compose(seq[p], seq[p + 1]);
  if (!h)
    throw Error(ErrorKind::Precondition, "no composable pair at step position");
  seq[p] = *h;
  seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(p) + 1);
  return seq;
}

std::vector<ArrowId> parseArrowWord(const FiniteCategory &s,
                                    std::string_view text) {
  std::vector<ArrowId> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (auto a = s.findArrow(token)) {
      out.push_back(*a);
      continue;
    }
    if (token == "1")
      continue;
    throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + token + "'");
  }
  return out;
}

std::string format(const FiniteCategory &s, const ReducedSeq &x) {
  if (x.isUnit())
    return "1";
  std::string out;
  for (ArrowId a : x.arrows()) {
    if (!out.empty())
      out += ' ';
    out += s.arrowName(a);
  }
  return out;
}

ReducedSeq multiply(const FiniteCategory &s, const ReducedSeq &x,
                    const ReducedSeq &y) {
  requireSameCategory(s, x);
  requireSameCategory(s, y);
  if (x.isUnit())
    return y;
  if (y.isUnit())
    return x;
  std::vector<ArrowId> out = x.arrows();
  if (s.conical()) {
    // A composite of non-identities is never an identity, so at most one
    // boundary merge happens.
    if (auto h = s.compose(out.back(), y.arrows().front())) {
      out.back() = *h;
      out.insert(out.end(), y.arrows().begin() + 1, y.arrows().end());
    } else {
      out.insert(out.end(), y.arrows().begin(), y.arrows().end());
    }
    return SeqAccess::make(s, std::move(out));
  }
  out.insert(out.end(), y.arrows().begin(), y.arrows().end());
  return normalForm(s, out);
}

std::pair<ArrowId, ArrowId> components(const ReducedSeq &x) {
  if (x.isUnit())
    throw Error(ErrorKind::EmptyElement, "the unit has no components");
  return {x.arrows().front(), x.arrows().back()};
}

namespace {

void requireConical(const FiniteCategory &s) {
  if (!s.conical())
    throw Error(ErrorKind::Precondition, "category is not conical");
}

bool cancellativeOn(Side side, const FiniteCategory &s) {
  return side == Side::Left ? s.leftCancellative() : s.rightCancellative();
}

} // namespace

Division divides(Side side, const ReducedSeq &x, const ReducedSeq &y,
                 const FiniteCategory &s) {
  requireSameCategory(s, x);
  requireSameCategory(s, y);
  requireConical(s);
  Division result;
  if (x.isUnit()) {
    result.divides = true;
    result.quotient = y;
    return result;
  }
  const auto &xa = x.arrows();
  const auto &ya = y.arrows();
  const std::size_t m = xa.size();
  const std::size_t n = ya.size();
  if (m > n)
    return result;
  const bool unique = cancellativeOn(side, s);

  if (side == Side::Left) {
    if (!std::equal(xa.begin(), xa.end() - 1, ya.begin()))
      return result;
    std::vector<ArrowId> rest(ya.begin() + static_cast<std::ptrdiff_t>(m), ya.end());
    if (xa.back() == ya[m - 1]) {
      result.divides = true;
      if (unique)
        result.quotient = SeqAccess::make(s, std::move(rest));
      return result;
    }
    auto w = catDivides(Side::Left, xa.back(), ya[m - 1], s);
    if (!w)
      return result;
    result.divides = true;
    if (unique) {
      rest.insert(rest.begin(), *w);
      result.quotient = normalForm(s, rest);
    }
    return result;
  }

  // Right: compare suffixes.
  const std::size_t offset = n - m;
  if (!std::equal(xa.begin() + 1, xa.end(),
                  ya.begin() + static_cast<std::ptrdiff_t>(offset) + 1))
    return result;
  std::vector<ArrowId> rest(ya.begin(), ya.begin() + static_cast<std::ptrdiff_t>(offset));
  if (xa.front() == ya[offset]) {
    result.divides = true;
    if (unique)
      result.quotient = SeqAccess::make(s, std::move(rest));
    return result;
  }
  auto w = catDivides(Side::Right, xa.front(), ya[offset], s);
  if (!w)
    return result;
  result.divides = true;
  if (unique) {
    rest.push_back(*w);
    result.quotient = normalForm(s, rest);
  }
  return result;
}

std::optional<ReducedSeq> gcdFamily(Side side, std::span<const ReducedSeq> xs,
                                    const FiniteCategory &s) {
  if (xs.empty())
    throw Error(ErrorKind::EmptyFamily, "gcd of an empty family");
  for (const auto &x : xs)
    requireSameCategory(s, x);
  requireConical(s);
  if (!cancellativeOn(side, s))
    throw Error(ErrorKind::Precondition,
                std::string("category is not ") + toString(side) +
                    " cancellative");

  // Length of the longest common prefix (Left) or suffix (Right).
  std::size_t common = xs.front().length();
  for (const auto &x : xs.subspan(1)) {
    const auto &a = xs.front().arrows();
    const auto &b = x.arrows();
    std::size_t k = 0;
    const std::size_t limit = std::min({common, a.size(), b.size()});
    if (side == Side::Left)
      while (k < limit && a[k] == b[k])
        ++k;
    else
      while (k < limit && a[a.size() - 1 - k] == b[b.size() - 1 - k])
        ++k;
    common = k;
  }
  const auto &first = xs.front().arrows();
  std::vector<ArrowId> shared =
      side == Side::Left
          ? std::vector<ArrowId>(first.begin(),
                                 first.begin() + static_cast<std::ptrdiff_t>(common))
          : std::vector<ArrowId>(first.end() - static_cast<std::ptrdiff_t>(common),
                                 first.end());
  ReducedSeq base = SeqAccess::make(s, shared);

  std::vector<ArrowId> residuals;
  for (const auto &x : xs) {
    if (x.length() == common)
      return base;
    const auto &a = x.arrows();
    residuals.push_back(side == Side::Left ? a[common] : a[a.size() - 1 - common]);
  }
  for (ArrowId r : residuals) {
    if (side == Side::Left && s.source(r) != s.source(residuals.front()))
      return base;
    if (side == Side::Right && s.target(r) != s.target(residuals.front()))
      return base;
  }
  auto c = catGcdFamily(side, residuals, s);
  if (!c)
    return std::nullopt;
  if (s.isIdentity(*c))
    return base;
  if (side == Side::Left)
    shared.push_back(*c);
  else
    shared.insert(shared.begin(), *c);
  return SeqAccess::make(s, std::move(shared));
}

std::optional<ReducedSeq> lcmPair(Side side, const ReducedSeq &x,
                                  const ReducedSeq &y, const FiniteCategory &s) {
  requireSameCategory(s, x);
  requireSameCategory(s, y);
  if (x.length() > 1 || y.length() > 1)
    throw Error(ErrorKind::Precondition,
                "lcmPair takes standard generators (length at most 1)");
  if (x.isUnit())
    return y;
  if (y.isUnit())
    return x;
  auto m = catLcm(side, x.arrows().front(), y.arrows().front(), s);
  if (!m)
    return std::nullopt;
  return ReducedSeq::generator(s, *m);
}

std::vector<ArrowId> greedyNormalForm(const ReducedSeq &x, const FiniteCategory &s) {
  requireSameCategory(s, x);
  requireConical(s);
  if (!s.leftCancellative())
    throw Error(ErrorKind::Precondition, "category is not left cancellative");
  const auto &entries = x.arrows();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ReducedSeq suffix = SeqAccess::make(
        s, std::vector<ArrowId>(entries.begin() + static_cast<std::ptrdiff_t>(i),
                                entries.end()));
    const ArrowId head = entries[i];
    bool headDivides = false;
    for (ArrowId a : s.arrowsFrom(s.source(head))) {
      if (!divides(Side::Left, ReducedSeq::generator(s, a), suffix, s).divides)
        continue;
      if (a == head)
        headDivides = true;
      if (!catDivides(Side::Left, a, head, s))
        throw Error(ErrorKind::GreedyViolation,
                    "'" + s.arrowName(a) + "' divides the suffix at position " +
                        std::to_string(i) + " but not its head '" +
                        s.arrowName(head) + "'");
    }
    if (!headDivides)
      throw Error(ErrorKind::GreedyViolation,
                  "head '" + s.arrowName(head) + "' does not divide its suffix");
  }
  return entries;
}

GroupPresentation universalGroupPresentation(const FiniteCategory &s) {
  GroupPresentation p;
  std::vector<std::size_t> genOf(s.arrowCount(), 0);
  for (std::size_t a = s.objectCount(); a < s.arrowCount(); ++a) {
    genOf[a] = p.generators.size();
    p.generators.push_back(s.arrowName(ArrowId(a)));
  }
  for (std::size_t f = s.objectCount(); f < s.arrowCount(); ++f) {
    for (ArrowId g : s.arrowsFrom(s.target(ArrowId(f)))) {
      if (s.isIdentity(g))
        continue;
      ArrowId h = *s.compose(ArrowId(f), g);
      GroupRelator r{{genOf[f], 1}, {genOf[toIndex(g)], 1}};
      if (!s.isIdentity(h))
        r.push_back({genOf[toIndex(h)], -1});
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

std::vector<ReducedSeq> enumerateElements(const FiniteCategory &s,
                                          std::size_t maxLength) {
  std::vector<ReducedSeq> out;
  out.push_back(ReducedSeq::unit(s));
  std::vector<std::vector<ArrowId>> level{{}};
  for (std::size_t len = 1; len <= maxLength; ++len) {
    std::vector<std::vector<ArrowId>> next;
    for (const auto &w : level)
      for (std::size_t a = s.objectCount(); a < s.arrowCount(); ++a) {
        if (!w.empty() && s.compose(w.back(), ArrowId(a)))
          continue;
        auto ext = w;
        ext.push_back(ArrowId(a));
        next.push_back(std::move(ext));
      }
    for (const auto &w : next)
      out.push_back(SeqAccess::make(s, w));
    level = std::move(next);
  }
  return out;
}

} // namespace catmon
