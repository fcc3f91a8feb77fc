#include "catmon/group_words.hpp"

#include "catmon/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace catmon {

GroupSpec GroupSpec::free(std::vector<std::string> letters) {
  GroupSpec g;
  g.kind = Kind::Free;
  g.letters = std::move(letters);
  return g;
}

GroupSpec GroupSpec::freeAbelian(std::size_t dimension) {
  GroupSpec g;
  g.kind = Kind::FreeAbelian;
  g.dimension = dimension;
  return g;
}

GroupSpec GroupSpec::freeProduct(std::vector<std::string> letters,
                                 const GroupSpec &other) {
  if (other.kind == Kind::FreeProduct)
    throw Error(ErrorKind::GroupMismatch, "nested free products are not supported");
  GroupSpec g;
  g.kind = Kind::FreeProduct;
  g.letters = std::move(letters);
  g.second.push_back(other);
  return g;
}

namespace {

using Letters = GroupWord::Letters;
using Vector = GroupWord::Vector;
using Syllables = GroupWord::Syllables;
using Syllable = GroupWord::Syllable;

[[noreturn]] void mismatch(const std::string &what) {
  throw Error(ErrorKind::GroupMismatch, what);
}

const GroupSpec &factorSpec(const GroupSpec &product, std::size_t factor,
                            GroupSpec &scratch) {
  if (factor == 0) {
    scratch = GroupSpec::free(product.letters);
    return scratch;
  }
  return product.secondFactor();
}

Letters reduceLetters(Letters w) { return freelyReduce(w); }

bool trivialValue(const std::variant<Letters, Vector> &v) {
  if (auto l = std::get_if<Letters>(&v))
    return l->empty();
  const auto &x = std::get<Vector>(v);
  return std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; });
}

void checkSimple(const GroupSpec &g, const std::variant<Letters, Vector> &v) {
  if (g.kind == GroupSpec::Kind::Free) {
    auto l = std::get_if<Letters>(&v);
    if (!l)
      mismatch("expected a free group word");
    for (const auto &x : *l)
      if (x.generator >= g.letters.size() || (x.exponent != 1 && x.exponent != -1))
        mismatch("letter outside the free group alphabet");
    if (freelyReduce(*l) != *l)
      mismatch("free group word is not reduced");
    return;
  }
  auto x = std::get_if<Vector>(&v);
  if (!x || x->size() != g.dimension)
    mismatch("expected a vector of dimension " + std::to_string(g.dimension));
}

std::variant<Letters, Vector> multiplySimple(const GroupSpec &g,
                                             const std::variant<Letters, Vector> &a,
                                             const std::variant<Letters, Vector> &b) {
  if (g.kind == GroupSpec::Kind::Free) {
    Letters out = std::get<Letters>(a);
    const auto &rhs = std::get<Letters>(b);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return reduceLetters(std::move(out));
  }
  Vector out = std::get<Vector>(a);
  const auto &rhs = std::get<Vector>(b);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += rhs[i];
  return out;
}

std::variant<Letters, Vector> invertSimple(const GroupSpec &g,
                                           const std::variant<Letters, Vector> &a) {
  if (g.kind == GroupSpec::Kind::Free)
    return inverse(std::get<Letters>(a));
  Vector out = std::get<Vector>(a);
  for (auto &c : out)
    c = -c;
  return out;
}

std::string formatLetters(const std::vector<std::string> &alphabet, const Letters &w) {
  if (w.empty())
    return "1";
  std::string out;
  for (const auto &l : w) {
    if (!out.empty())
      out += ' ';
    out += alphabet[l.generator];
    if (l.exponent < 0)
      out += "^-1";
  }
  return out;
}

std::string formatVector(const Vector &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string formatSimple(const GroupSpec &g, const std::variant<Letters, Vector> &v) {
  if (g.kind == GroupSpec::Kind::Free)
    return formatLetters(g.letters, std::get<Letters>(v));
  return formatVector(std::get<Vector>(v));
}

} // namespace

GroupWord identityOf(const GroupSpec &g) {
  switch (g.kind) {
  case GroupSpec::Kind::Free:
    return {Letters{}};
  case GroupSpec::Kind::FreeAbelian:
    return {Vector(g.dimension, 0)};
  case GroupSpec::Kind::FreeProduct:
    return {Syllables{}};
  }
  return {};
}

bool isTrivial(const GroupWord &w) {
  if (auto s = std::get_if<Syllables>(&w.value))
    return s->empty();
  if (auto l = std::get_if<Letters>(&w.value))
    return l->empty();
  const auto &x = std::get<Vector>(w.value);
  return std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; });
}

void checkWord(const GroupSpec &g, const GroupWord &w) {
  if (g.kind != GroupSpec::Kind::FreeProduct) {
    if (std::holds_alternative<Syllables>(w.value))
      mismatch("free product element given for a factor group");
    std::variant<Letters, Vector> v;
    if (auto l = std::get_if<Letters>(&w.value))
      v = *l;
    else
      v = std::get<Vector>(w.value);
    checkSimple(g, v);
    return;
  }
  auto s = std::get_if<Syllables>(&w.value);
  if (!s)
    mismatch("expected a free product element");
  GroupSpec scratch;
  for (std::size_t i = 0; i < s->size(); ++i) {
    const auto &syl = (*s)[i];
    if (syl.factor > 1)
      mismatch("syllable factor out of range");
    checkSimple(factorSpec(g, syl.factor, scratch), syl.value);
    if (trivialValue(syl.value))
      mismatch("trivial syllable");
    if (i > 0 && (*s)[i - 1].factor == syl.factor)
      mismatch("syllables do not alternate");
  }
}

GroupWord groupMultiply(const GroupSpec &g, const GroupWord &a, const GroupWord &b) {
  checkWord(g, a);
  checkWord(g, b);
  if (g.kind == GroupSpec::Kind::Free)
    return {std::get<Letters>(
        multiplySimple(g, std::get<Letters>(a.value), std::get<Letters>(b.value)))};
  if (g.kind == GroupSpec::Kind::FreeAbelian)
    return {std::get<Vector>(
        multiplySimple(g, std::get<Vector>(a.value), std::get<Vector>(b.value)))};

  // Free product: merge syllables across the junction, cascading when a
  // merged syllable becomes trivial.
  Syllables out = std::get<Syllables>(a.value);
  GroupSpec scratch;
  for (const auto &syl : std::get<Syllables>(b.value)) {
    Syllable incoming = syl;
    bool merged = false;
    while (!out.empty() && out.back().factor == incoming.factor) {
      auto product = multiplySimple(factorSpec(g, incoming.factor, scratch),
                                    out.back().value, incoming.value);
      out.pop_back();
      if (trivialValue(product)) {
        merged = true;
        break;
      }
      incoming.value = std::move(product);
    }
    if (!merged)
      out.push_back(std::move(incoming));
  }
  return {std::move(out)};
}

GroupWord groupInverse(const GroupSpec &g, const GroupWord &a) {
  checkWord(g, a);
  if (g.kind == GroupSpec::Kind::Free)
    return {inverse(std::get<Letters>(a.value))};
  if (g.kind == GroupSpec::Kind::FreeAbelian)
    return {std::get<Vector>(invertSimple(g, std::get<Vector>(a.value)))};
  Syllables out;
  GroupSpec scratch;
  const auto &in = std::get<Syllables>(a.value);
  for (auto it = in.rbegin(); it != in.rend(); ++it)
    out.push_back({it->factor, invertSimple(factorSpec(g, it->factor, scratch), it->value)});
  return {std::move(out)};
}

GroupWord inFactor(const GroupSpec &product, std::size_t factor,
                   const GroupWord &element) {
  if (product.kind != GroupSpec::Kind::FreeProduct || factor > 1)
    mismatch("not a factor of a free product");
  GroupSpec scratch;
  const GroupSpec &fs = factorSpec(product, factor, scratch);
  checkWord(fs, element);
  if (isTrivial(element))
    return identityOf(product);
  std::variant<Letters, Vector> v;
  if (auto l = std::get_if<Letters>(&element.value))
    v = *l;
  else
    v = std::get<Vector>(element.value);
  return {Syllables{{factor, std::move(v)}}};
}

std::string formatWord(const GroupSpec &g, const GroupWord &w) {
  checkWord(g, w);
  if (g.kind == GroupSpec::Kind::Free)
    return formatLetters(g.letters, std::get<Letters>(w.value));
  if (g.kind == GroupSpec::Kind::FreeAbelian)
    return formatVector(std::get<Vector>(w.value));
  const auto &syllables = std::get<Syllables>(w.value);
  if (syllables.empty())
    return "1";
  std::string out;
  GroupSpec scratch;
  for (const auto &syl : syllables)
    out += "(" + formatSimple(factorSpec(g, syl.factor, scratch), syl.value) + ")";
  return out;
}

GroupWord parseGroupElement(const GroupSpec &g, std::string_view text) {
  std::string s(text);
  if (g.kind == GroupSpec::Kind::FreeAbelian) {
    std::string body;
    for (char c : s)
      if (c != '(' && c != ')' && c != ' ' && c != '\t')
        body += c;
    Vector v;
    if (body != "1" && !body.empty()) {
      std::istringstream in(body);
      std::string part;
      while (std::getline(in, part, ',')) {
        try {
          std::size_t used = 0;
          v.push_back(std::stoll(part, &used));
          if (used != part.size())
            throw std::invalid_argument(part);
        } catch (const std::logic_error &) {
          throw Error(ErrorKind::Parse, "bad vector entry '" + part + "'");
        }
      }
    } else {
      v.assign(g.dimension, 0);
    }
    if (v.size() != g.dimension)
      throw Error(ErrorKind::GroupMismatch,
                  "vector '" + s + "' does not have dimension " +
                      std::to_string(g.dimension));
    return {std::move(v)};
  }
  if (g.kind != GroupSpec::Kind::Free)
    throw Error(ErrorKind::GroupMismatch, "free product elements are not parsed");
  Letters w;
  std::istringstream in(s);
  std::string token;
  while (in >> token) {
    int exponent = 1;
    std::string name = token;
    if (name.size() > 3 && name.ends_with("^-1")) {
      name.resize(name.size() - 3);
      exponent = -1;
    }
    auto it = std::find(g.letters.begin(), g.letters.end(), name);
    if (it == g.letters.end()) {
      if (token == "1")
        continue;
      throw Error(ErrorKind::UnknownGenerator, "unknown letter '" + name + "'");
    }
    w.push_back({static_cast<std::size_t>(it - g.letters.begin()), exponent});
  }
  return {freelyReduce(w)};
}

CategoryFunctor makeFunctor(const FiniteCategory &s, GroupSpec target,
                            const std::vector<std::pair<std::string, GroupWord>> &images) {
  CategoryFunctor f;
  f.target = std::move(target);
  f.images.assign(s.arrowCount(), std::nullopt);
  for (std::size_t o = 0; o < s.objectCount(); ++o)
    f.images[o] = identityOf(f.target);
  for (const auto &[name, word] : images) {
    auto a = s.findArrow(name);
    if (!a)
      throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + name + "'");
    checkWord(f.target, word);
    if (s.isIdentity(*a) && !isTrivial(word))
      throw Error(ErrorKind::BadIdentity,
                  "identity '" + name + "' must map to the group identity");
    f.images[toIndex(*a)] = word;
  }
  return f;
}

CategoryFunctor trivialFunctor(const FiniteCategory &s) {
  CategoryFunctor f;
  f.target = GroupSpec::free({});
  f.images.assign(s.arrowCount(), identityOf(f.target));
  return f;
}

namespace {

const GroupWord &imageOf(const CategoryFunctor &psi, const FiniteCategory &s, ArrowId a) {
  if (psi.images.size() != s.arrowCount())
    throw Error(ErrorKind::MissingImage, "functor does not match the category");
  const auto &img = psi.images[toIndex(a)];
  if (!img)
    throw Error(ErrorKind::MissingImage, "no image for arrow '" + s.arrowName(a) + "'");
  return *img;
}

} // namespace

SeparationReport checkSeparation(const FiniteCategory &s, const CategoryFunctor &psi) {
  SeparationReport report;
  for (std::size_t a = 0; a < s.arrowCount(); ++a)
    checkWord(psi.target, imageOf(psi, s, ArrowId(a)));

  for (std::size_t o = 0; o < s.objectCount() && report.functorial; ++o)
    if (!isTrivial(imageOf(psi, s, ArrowId(o)))) {
      report.functorial = false;
      report.functorialityFailure = std::pair{ArrowId(o), ArrowId(o)};
    }
  for (std::size_t f = 0; f < s.arrowCount() && report.functorial; ++f)
    for (ArrowId g : s.arrowsFrom(s.target(ArrowId(f)))) {
      ArrowId h = *s.compose(ArrowId(f), g);
      if (groupMultiply(psi.target, imageOf(psi, s, ArrowId(f)), imageOf(psi, s, g)) !=
          imageOf(psi, s, h)) {
        report.functorial = false;
        report.functorialityFailure = std::pair{ArrowId(f), g};
        break;
      }
    }

  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> homs;
  for (std::size_t x = 0; x < s.objectCount(); ++x)
    for (std::size_t y = 0; y < s.objectCount(); ++y) {
      auto h = s.homSet(ObjectId(x), ObjectId(y));
      if (h.size() > 1)
        homs.push_back({h.size(), {x, y}});
    }
  std::stable_sort(homs.begin(), homs.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });
  for (const auto &[size, ends] : homs) {
    auto h = s.homSet(ObjectId(ends.first), ObjectId(ends.second));
    std::map<GroupWord, ArrowId> seen;
    for (ArrowId a : h) {
      auto [it, fresh] = seen.emplace(imageOf(psi, s, a), a);
      if (!fresh) {
        report.separating = false;
        report.violatingPair = std::pair{it->second, a};
        return report;
      }
    }
  }
  return report;
}

namespace {

std::string primed(const std::vector<std::string> &taken, std::string name) {
  do
    name += '\'';
  while (std::find(taken.begin(), taken.end(), name) != taken.end());
  return name;
}

} // namespace

CategoryFunctor highlightingExpansion(const FiniteCategory &s,
                                      const CategoryFunctor &psi) {
  std::vector<std::string> objects;
  for (std::size_t o = 0; o < s.objectCount(); ++o)
    objects.push_back(s.objectName(ObjectId(o)));

  // Embedding of the old target into the new free product.
  GroupSpec target;
  std::size_t offset = 0;
  const GroupSpec &old = psi.target;
  if (old.kind == GroupSpec::Kind::FreeProduct) {
    std::vector<std::string> letters = objects;
    offset = letters.size();
    for (const auto &l : old.letters) {
      std::string name = std::find(letters.begin(), letters.end(), l) == letters.end()
                             ? l
                             : primed(letters, l);
      letters.push_back(name);
    }
    target = GroupSpec::freeProduct(std::move(letters), old.secondFactor());
  } else {
    target = GroupSpec::freeProduct(objects, old);
  }

  auto lift = [&](const GroupWord &w) -> GroupWord {
    if (old.kind != GroupSpec::Kind::FreeProduct)
      return inFactor(target, 1, w);
    Syllables out;
    for (auto syl : std::get<Syllables>(w.value)) {
      if (syl.factor == 0)
        for (auto &l : std::get<Letters>(syl.value))
          l.generator += offset;
      out.push_back(std::move(syl));
    }
    return {std::move(out)};
  };
  auto objectLetter = [&](ObjectId o, int exponent) {
    return inFactor(target, 0, GroupWord{Letters{{toIndex(o), exponent}}});
  };

  CategoryFunctor out;
  out.target = target;
  out.images.resize(s.arrowCount());
  for (std::size_t a = 0; a < s.arrowCount(); ++a) {
    ArrowId id = ArrowId(a);
    GroupWord w = objectLetter(s.source(id), -1);
    w = groupMultiply(target, w, lift(imageOf(psi, s, id)));
    w = groupMultiply(target, w, objectLetter(s.target(id), 1));
    out.images[a] = std::move(w);
  }
  return out;
}

SigmaMap sigmaMap(const FiniteCategory &s, const CategoryFunctor &psi) {
  SeparationReport sep = checkSeparation(s, psi);
  if (!sep.passed())
    throw Error(ErrorKind::SeparationRequired,
                "functor is not functorial and separating on hom-sets");
  bool killsArrow = false;
  for (std::size_t a = s.objectCount(); a < s.arrowCount(); ++a)
    if (isTrivial(imageOf(psi, s, ArrowId(a))))
      killsArrow = true;
  CategoryFunctor base = killsArrow ? highlightingExpansion(s, psi) : psi;
  CategoryFunctor expanded = highlightingExpansion(s, base);
  SigmaMap sigma;
  sigma.target = expanded.target;
  for (auto &img : expanded.images)
    sigma.arrowImages.push_back(std::move(*img));
  return sigma;
}

GroupWord sigmaImage(const SigmaMap &sigma, const ReducedSeq &x) {
  GroupWord w = identityOf(sigma.target);
  for (ArrowId a : x.arrows())
    w = groupMultiply(sigma.target, w, sigma.arrowImages.at(toIndex(a)));
  return w;
}

GroupWord sigmaImage(const ReducedSeq &x, const FiniteCategory &s,
                     const CategoryFunctor &psi) {
  if (x.categoryUid() != s.uid())
    throw Error(ErrorKind::CategoryMismatch, "element belongs to a different category");
  return sigmaImage(sigmaMap(s, psi), x);
}

EmbeddabilityReport embeddabilityVerdict(const FiniteCategory &s,
                                         const CategoryFunctor &psi,
                                         std::size_t maxLength) {
  EmbeddabilityReport report;
  report.separation = checkSeparation(s, psi);
  report.sampleLength = maxLength;
  if (!report.separation.passed())
    return report;
  SigmaMap sigma = sigmaMap(s, psi);
  auto elements = enumerateElements(s, maxLength);
  report.sampledElements = elements.size();
  std::map<GroupWord, std::size_t> seen;
  report.sampledInjective = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto [it, fresh] = seen.emplace(sigmaImage(sigma, elements[i]), i);
    if (!fresh) {
      report.sampledInjective = false;
      report.collision = std::pair{elements[it->second], elements[i]};
      break;
    }
  }
  report.embeds = report.sampledInjective;
  return report;
}

} // namespace catmon
