#include "doctest.h"
#include "support.hpp"

#include "catmon/catalog.hpp"
#include "catmon/error.hpp"
#include "catmon/group_words.hpp"
#include "catmon/interval.hpp"

#include <functional>

using namespace catmon;
using namespace testing;

namespace {

ErrorKind kindOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

GroupWord letter(std::size_t g, int e) { return {GroupWord::Letters{{g, e}}}; }

// Product of random single letters (free) or unit vectors (abelian).
GroupWord randomSimple(const GroupSpec &g, std::size_t length, std::mt19937 &rng) {
  GroupWord w = identityOf(g);
  for (std::size_t i = 0; i < length; ++i) {
    GroupWord step;
    if (g.kind == GroupSpec::Kind::Free) {
      step = letter(rng() % g.letters.size(), rng() % 2 ? 1 : -1);
    } else {
      GroupWord::Vector v(g.dimension, 0);
      v[rng() % g.dimension] = rng() % 2 ? 1 : -1;
      step = {v};
    }
    w = groupMultiply(g, w, step);
  }
  return w;
}

GroupWord randomProductElement(const GroupSpec &g, std::size_t length, std::mt19937 &rng) {
  GroupWord w = identityOf(g);
  GroupSpec free = GroupSpec::free(g.letters);
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t factor = rng() % 2;
    auto piece = factor == 0 ? randomSimple(free, 1 + rng() % 2, rng)
                             : randomSimple(g.secondFactor(), 1 + rng() % 2, rng);
    w = groupMultiply(g, w, inFactor(g, factor, piece));
  }
  return w;
}

} // namespace

TEST_CASE("group multiplication examples") {
  auto f = GroupSpec::free({"x", "y"});
  CHECK(isTrivial(groupMultiply(f, letter(0, 1), letter(0, -1))));
  auto z3 = GroupSpec::freeAbelian(3);
  CHECK(groupMultiply(z3, parseGroupElement(z3, "(1,0,0)"), parseGroupElement(z3, "(0,2,0)")) ==
        parseGroupElement(z3, "(1,2,0)"));

  auto prod = GroupSpec::freeProduct({"a"}, GroupSpec::free({"g"}));
  auto a = inFactor(prod, 0, letter(0, 1));
  auto ainv = inFactor(prod, 0, letter(0, -1));
  auto g = inFactor(prod, 1, letter(0, 1));
  auto left = groupMultiply(prod, groupMultiply(prod, a, g), ainv);
  CHECK(formatWord(prod, left) == "(a)(g)(a^-1)");
  CHECK(formatWord(prod, groupMultiply(prod, left, a)) == "(a)(g)");
  CHECK(formatWord(prod, identityOf(prod)) == "1");
}

TEST_CASE("formatting and parsing") {
  auto f = GroupSpec::free({"x", "y"});
  auto w = parseGroupElement(f, "x y^-1 y x");
  CHECK(formatWord(f, w) == "x x");
  CHECK(formatWord(f, parseGroupElement(f, "1")) == "1");
  auto z2 = GroupSpec::freeAbelian(2);
  CHECK(formatWord(z2, parseGroupElement(z2, "(3,-1)")) == "(3,-1)");
  CHECK((kindOf([&] { parseGroupElement(z2, "(1,2,3)"); }) == ErrorKind::GroupMismatch));
  CHECK((kindOf([&] { parseGroupElement(f, "z"); }) == ErrorKind::UnknownGenerator));
  CHECK((kindOf([&] { groupMultiply(f, w, parseGroupElement(z2, "(1,0)")); }) ==
        ErrorKind::GroupMismatch));
}

TEST_CASE("random words times their inverses are trivial and products associate") {
  std::mt19937 rng(8);
  std::vector<GroupSpec> groups{GroupSpec::free({"x", "y", "z"}), GroupSpec::freeAbelian(3),
                                GroupSpec::freeProduct({"o", "p"}, GroupSpec::free({"g", "h"})),
                                GroupSpec::freeProduct({"o"}, GroupSpec::freeAbelian(2))};
  for (const auto &g : groups)
    for (int i = 0; i < 300; ++i) {
      auto make = [&] {
        return g.kind == GroupSpec::Kind::FreeProduct ? randomProductElement(g, 4, rng)
                                                      : randomSimple(g, 6, rng);
      };
      auto x = make(), y = make(), z = make();
      checkWord(g, x);
      CHECK(isTrivial(groupMultiply(g, x, groupInverse(g, x))));
      CHECK(isTrivial(groupMultiply(g, groupInverse(g, x), x)));
      CHECK(groupMultiply(g, groupMultiply(g, x, y), z) ==
            groupMultiply(g, x, groupMultiply(g, y, z)));
      CHECK(groupInverse(g, groupMultiply(g, x, y)) ==
            groupMultiply(g, groupInverse(g, y), groupInverse(g, x)));
    }
}

TEST_CASE("free product normal forms alternate and have no trivial syllables") {
  std::mt19937 rng(21);
  auto g = GroupSpec::freeProduct({"o", "p"}, GroupSpec::freeAbelian(2));
  for (int i = 0; i < 300; ++i) {
    auto w = randomProductElement(g, 6, rng);
    const auto &syl = std::get<GroupWord::Syllables>(w.value);
    for (std::size_t k = 0; k < syl.size(); ++k) {
      if (k + 1 < syl.size())
        CHECK(syl[k].factor != syl[k + 1].factor);
      if (syl[k].factor == 0)
        CHECK_FALSE(std::get<GroupWord::Letters>(syl[k].value).empty());
      else
        CHECK(std::get<GroupWord::Vector>(syl[k].value) != GroupWord::Vector{0, 0});
    }
  }
}

TEST_CASE("separation examples") {
  auto s = catalog::c6();
  auto psi = catalog::c6Functor(s);
  auto report = checkSeparation(s, psi);
  CHECK(report.functorial);
  CHECK(report.separating);
  std::set<GroupWord> images;
  for (ArrowId a : s.homSet(*s.findObject("0"), *s.findObject("2")))
    images.insert(*psi.images[toIndex(a)]);
  CHECK(images.size() == 6);

  auto trivial = checkSeparation(s, trivialFunctor(s));
  CHECK(trivial.functorial);
  CHECK_FALSE(trivial.separating);
  REQUIRE(trivial.violatingPair);
  CHECK(s.arrowName(trivial.violatingPair->first) == "aa'");
  CHECK(s.arrowName(trivial.violatingPair->second) == "bb'");

  auto p = catOfPoset(catalog::diamond());
  CHECK(checkSeparation(p, trivialFunctor(p)).passed());

  auto missing = makeFunctor(s, GroupSpec::freeAbelian(3), {});
  CHECK((kindOf([&] { checkSeparation(s, missing); }) == ErrorKind::MissingImage));

  // Not a functor: a and a' both (1,0,0) but aa' sent to 0.
  auto z3 = GroupSpec::freeAbelian(3);
  std::vector<std::pair<std::string, GroupWord>> images2;
  for (std::size_t a = s.objectCount(); a < s.arrowCount(); ++a)
    images2.emplace_back(s.arrowName(ArrowId(a)), *psi.images[a]);
  images2[6].second = identityOf(z3);
  auto broken = checkSeparation(s, makeFunctor(s, z3, images2));
  CHECK_FALSE(broken.functorial);
}

TEST_CASE("highlighting expansion") {
  auto s = catalog::c6();
  auto psi = catalog::c6Functor(s);
  auto expanded = highlightingExpansion(s, psi);
  CHECK(formatWord(expanded.target, *expanded.images[toIndex(*s.findArrow("a"))]) ==
        "(0^-1)((1,0,0))(1)");
  for (std::size_t o = 0; o < s.objectCount(); ++o)
    CHECK(isTrivial(*expanded.images[o]));
  CHECK(checkSeparation(s, expanded).passed());

  // The claim: after one expansion only identities go to 1, for any functor.
  std::vector<FiniteCategory> cats{s, catOfPoset(catalog::diamond()),
                                   catalog::cancellationCounterexample()};
  for (const auto &c : cats) {
    auto e = highlightingExpansion(c, trivialFunctor(c));
    CHECK(checkSeparation(c, e).functorial);
    for (std::size_t a = 0; a < c.arrowCount(); ++a)
      CHECK(isTrivial(*e.images[a]) == c.isIdentity(ArrowId(a)));
  }
}

TEST_CASE("sigma images") {
  auto s = catalog::c6();
  auto psi = catalog::c6Functor(s);
  auto sigma = sigmaMap(s, psi);
  CHECK(isTrivial(sigmaImage(sigma, ReducedSeq::unit(s))));
  auto aa = normalForm(s, parseArrowWord(s, "a a'"));
  CHECK(formatWord(sigma.target, sigmaImage(sigma, aa)) == "(0^-1)((2,0,0))(2)");
  CHECK(sigmaImage(aa, s, psi) == sigmaImage(sigma, aa));
  CHECK((kindOf([&] { sigmaMap(s, trivialFunctor(s)); }) == ErrorKind::SeparationRequired));
}

TEST_CASE("sigma is injective whenever separation holds") {
  std::vector<std::pair<FiniteCategory, CategoryFunctor>> cases;
  auto c6 = catalog::c6();
  cases.emplace_back(c6, catalog::c6Functor(c6));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &r : orderTypes(n)) {
      auto s = catOfPoset(posetFrom(n, r));
      cases.emplace_back(s, trivialFunctor(s));
    }
  for (auto &s : randomCategories(60, 404, 12)) {
    auto psi = trivialFunctor(s);
    if (checkSeparation(s, psi).passed())
      cases.emplace_back(s, psi);
  }
  for (const auto &[s, psi] : cases) {
    auto sigma = sigmaMap(s, psi);
    auto elements = enumerateElements(s, 3);
    std::set<GroupWord> images;
    for (const auto &x : elements) {
      auto w = sigmaImage(sigma, x);
      checkWord(sigma.target, w);
      images.insert(w);
    }
    CHECK(images.size() == elements.size());
  }
}

TEST_CASE("sigma is a homomorphism") {
  auto s = catalog::c6();
  auto sigma = sigmaMap(s, catalog::c6Functor(s));
  auto xs = enumerateElements(s, 2);
  for (const auto &x : xs)
    for (const auto &y : xs)
      CHECK(sigmaImage(sigma, multiply(s, x, y)) ==
            groupMultiply(sigma.target, sigmaImage(sigma, x), sigmaImage(sigma, y)));
}

TEST_CASE("embeddability verdicts") {
  auto s = catalog::c6();
  auto yes = embeddabilityVerdict(s, catalog::c6Functor(s));
  CHECK(yes.embeds);
  CHECK(yes.sampledElements == 1660);
  CHECK(yes.sampledInjective);
  auto p = catOfPoset(catalog::diamond());
  CHECK(embeddabilityVerdict(p, trivialFunctor(p)).embeds);
  auto no = embeddabilityVerdict(s, trivialFunctor(s));
  CHECK_FALSE(no.embeds);
  CHECK_FALSE(no.separation.separating);
}
