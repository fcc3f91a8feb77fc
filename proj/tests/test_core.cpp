#include "doctest.h"
#include "support.hpp"

#include "catmon/catalog.hpp"
#include "catmon/category.hpp"
#include "catmon/complex.hpp"
#include "catmon/error.hpp"
#include "catmon/group_presentation.hpp"
#include "catmon/interval.hpp"
#include "catmon/poset.hpp"

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

ArrowId arrow(const FiniteCategory &s, const std::string &name) {
  auto a = s.findArrow(name);
  REQUIRE(a);
  return *a;
}

} // namespace

TEST_CASE("trivial one-object category") {
  CategoryDescription d;
  d.objects = {"o"};
  auto s = validateCategory(d);
  CHECK(s.objectCount() == 1);
  CHECK(s.arrowCount() == 1);
  CHECK(s.isIdentity(arrow(s, "id:o")));
  CHECK(isConical(s));
  CHECK(isLeftCancellative(s));
  CHECK(isRightCancellative(s));
  CHECK(isGcdCategory(s).overall());
}

TEST_CASE("interval category of the diamond validates") {
  auto s = catOfPoset(catalog::diamond());
  CHECK(s.arrowCount() == 9);
  // Every composable triple associates.
  for (std::size_t f = 0; f < s.arrowCount(); ++f)
    for (std::size_t g = 0; g < s.arrowCount(); ++g)
      for (std::size_t h = 0; h < s.arrowCount(); ++h) {
        auto fg = s.compose(ArrowId(f), ArrowId(g));
        auto gh = s.compose(ArrowId(g), ArrowId(h));
        if (fg && gh)
          CHECK(s.compose(*fg, ArrowId(h)) == s.compose(ArrowId(f), *gh));
      }
  CHECK(s.compose(arrow(s, "[0,a]"), arrow(s, "[a,1]")) == arrow(s, "[0,1]"));
  CHECK(s.compose(arrow(s, "[0,b]"), arrow(s, "[b,1]")) == arrow(s, "[0,1]"));
}

TEST_CASE("validation errors") {
  CategoryDescription d;
  d.objects = {"x", "y"};
  d.arrows = {{"f", "x", "y"}, {"g", "x", "y"}};
  d.composites = {{"f", "g", "f"}};
  CHECK((kindOf([&] { validateCategory(d); }) == ErrorKind::BadComposability));

  CategoryDescription loop;
  loop.objects = {"o"};
  loop.arrows = {{"g", "o", "o"}};
  CHECK((kindOf([&] { validateCategory(loop); }) == ErrorKind::MissingComposite));

  CategoryDescription unknown;
  unknown.objects = {"o"};
  unknown.arrows = {{"g", "o", "p"}};
  CHECK((kindOf([&] { validateCategory(unknown); }) == ErrorKind::UnknownObject));

  CategoryDescription dup;
  dup.objects = {"o", "p"};
  dup.arrows = {{"g", "o", "p"}, {"g", "o", "p"}};
  CHECK((kindOf([&] { validateCategory(dup); }) == ErrorKind::DuplicateName));

  CategoryDescription unknownArrow;
  unknownArrow.objects = {"o", "p"};
  unknownArrow.arrows = {{"g", "o", "p"}};
  unknownArrow.composites = {{"id:o", "h", "g"}};
  CHECK((kindOf([&] { validateCategory(unknownArrow); }) == ErrorKind::UnknownArrow));

  // (g g) g = h g = h but g (g g) = g h = g.
  CategoryDescription assoc;
  assoc.objects = {"o"};
  assoc.arrows = {{"g", "o", "o"}, {"h", "o", "o"}};
  assoc.composites = {{"g", "g", "h"}, {"g", "h", "g"}, {"h", "g", "h"}, {"h", "h", "h"}};
  CHECK((kindOf([&] { validateCategory(assoc); }) == ErrorKind::AssociativityViolation));

  CHECK((kindOf([&] { validateCategory(catalog::c6Description(), {5}); }) ==
        ErrorKind::SizeLimit));
}

TEST_CASE("conicality examples") {
  CHECK(isConical(catOfPoset(catalog::diamond())));
  CHECK_FALSE(isConical(catalog::cyclicGroupOfOrderTwo()));
  CHECK(isConical(catalog::c6()));
}

TEST_CASE("the ac = bc category is left but not right cancellative") {
  // a x = a y forces x = y here; it is x a = y a that fails (a c = b c).
  auto s = catalog::cancellationCounterexample();
  CHECK(isLeftCancellative(s));
  CHECK_FALSE(isRightCancellative(s));
  auto report = isGcdCategory(s);
  CHECK_FALSE(report.rightCancellative);
  CHECK_FALSE(report.overall());
  CHECK(s.compose(arrow(s, "a"), arrow(s, "c")) == s.compose(arrow(s, "b"), arrow(s, "c")));
}

TEST_CASE("C6 is a gcd-category") {
  auto report = isGcdCategory(catalog::c6());
  CHECK(report.conical);
  CHECK(report.leftCancellative);
  CHECK(report.rightCancellative);
  CHECK(report.leftGcds);
  CHECK(report.rightGcds);
  CHECK(report.overall());
}

TEST_CASE("catDivides examples on the diamond") {
  auto s = catOfPoset(catalog::diamond());
  CHECK(catDivides(Side::Left, arrow(s, "[0,a]"), arrow(s, "[0,1]"), s) == arrow(s, "[a,1]"));
  CHECK(catDivides(Side::Left, arrow(s, "[0,a]"), arrow(s, "[0,a]"), s) == arrow(s, "[a,a]"));
  CHECK_FALSE(catDivides(Side::Left, arrow(s, "[0,a]"), arrow(s, "[0,b]"), s));
  CHECK(catDivides(Side::Right, arrow(s, "[a,1]"), arrow(s, "[0,1]"), s) == arrow(s, "[0,a]"));
}

TEST_CASE("catGcd examples") {
  auto s = catOfPoset(catalog::diamond());
  CHECK(catGcd(Side::Left, arrow(s, "[0,1]"), arrow(s, "[0,a]"), s) == arrow(s, "[0,a]"));
  CHECK(catGcd(Side::Left, arrow(s, "[0,a]"), arrow(s, "[0,a]"), s) == arrow(s, "[0,a]"));
  CHECK((kindOf([&] { catGcd(Side::Left, arrow(s, "[0,a]"), arrow(s, "[a,1]"), s); }) ==
        ErrorKind::SourceMismatch));
  CHECK((kindOf([&] { catGcd(Side::Right, arrow(s, "[0,a]"), arrow(s, "[a,1]"), s); }) ==
        ErrorKind::TargetMismatch));
  auto v = catOfPoset(catalog::vee());
  CHECK(catGcd(Side::Left, arrow(v, "[o,p]"), arrow(v, "[o,q]"), v) == arrow(v, "[o,o]"));
  CHECK(catLcm(Side::Left, arrow(s, "[0,a]"), arrow(s, "[0,b]"), s) == arrow(s, "[0,1]"));
  CHECK_FALSE(catLcm(Side::Left, arrow(v, "[o,p]"), arrow(v, "[o,q]"), v));
}

TEST_CASE("interval categories of all posets up to 5 elements") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto &r : orderTypes(n)) {
      auto s = catOfPoset(posetFrom(n, r));
      CHECK(isConical(s));
      CHECK(isLeftCancellative(s));
      CHECK(isRightCancellative(s));
    }
}

TEST_CASE("category properties against brute force on random categories") {
  for (const auto &s : randomCategories(60, 123)) {
    CHECK(isConical(s) == bruteConical(s));
    CHECK(isLeftCancellative(s) == bruteCancellative(Side::Left, s));
    CHECK(isRightCancellative(s) == bruteCancellative(Side::Right, s));
    const std::size_t n = s.arrowCount();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        // Witness search by scanning every arrow.
        std::optional<ArrowId> scan;
        for (std::size_t x = 0; x < n && !scan; ++x)
          if (s.compose(ArrowId(a), ArrowId(x)) == ArrowId(b))
            scan = ArrowId(x);
        auto w = catDivides(Side::Left, ArrowId(a), ArrowId(b), s);
        CHECK(w.has_value() == scan.has_value());
        if (w)
          CHECK(s.compose(ArrowId(a), *w) == ArrowId(b));
      }
  }
}

TEST_CASE("left divisibility is antisymmetric in conical left cancellative categories") {
  for (const auto &s : randomCategories(60, 77)) {
    if (!isConical(s) || !isLeftCancellative(s))
      continue;
    for (std::size_t a = 0; a < s.arrowCount(); ++a)
      for (std::size_t b = 0; b < s.arrowCount(); ++b)
        if (a != b && catDivides(Side::Left, ArrowId(a), ArrowId(b), s))
          CHECK_FALSE(catDivides(Side::Left, ArrowId(b), ArrowId(a), s));
  }
}

TEST_CASE("catGcd is a greatest common divisor") {
  auto check = [](const FiniteCategory &s) {
    for (Side side : {Side::Left, Side::Right})
      for (std::size_t a = 0; a < s.arrowCount(); ++a)
        for (std::size_t b = 0; b < s.arrowCount(); ++b) {
          bool shared = side == Side::Left ? s.source(ArrowId(a)) == s.source(ArrowId(b))
                                           : s.target(ArrowId(a)) == s.target(ArrowId(b));
          if (!shared)
            continue;
          auto g = catGcd(side, ArrowId(a), ArrowId(b), s);
          if (!g)
            continue;
          CHECK(catDivides(side, *g, ArrowId(a), s));
          CHECK(catDivides(side, *g, ArrowId(b), s));
          for (std::size_t d = 0; d < s.arrowCount(); ++d)
            if (catDivides(side, ArrowId(d), ArrowId(a), s) &&
                catDivides(side, ArrowId(d), ArrowId(b), s))
              CHECK(catDivides(side, ArrowId(d), *g, s));
        }
  };
  check(catalog::c6());
  check(catOfPoset(catalog::noMeet()));
  for (const auto &s : randomCategories(30, 5))
    check(s);
}

TEST_CASE("describe round-trips") {
  for (const auto &s : randomCategories(20, 99)) {
    auto t = validateCategory(s.describe());
    REQUIRE(t.arrowCount() == s.arrowCount());
    for (std::size_t f = 0; f < s.arrowCount(); ++f) {
      CHECK(t.arrowName(ArrowId(f)) == s.arrowName(ArrowId(f)));
      for (std::size_t g = 0; g < s.arrowCount(); ++g)
        CHECK(t.compose(ArrowId(f), ArrowId(g)) == s.compose(ArrowId(f), ArrowId(g)));
    }
  }
}

TEST_CASE("poset construction") {
  auto p = catalog::diamond();
  CHECK(p.size() == 4);
  CHECK(p.leq(p.indexOf("0"), p.indexOf("1")));
  CHECK_FALSE(p.comparable(p.indexOf("a"), p.indexOf("b")));
  CHECK(p.leastElement() == p.indexOf("0"));
  CHECK(p.covers().size() == 4);
  CHECK((kindOf([] { Poset::fromCovers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}}); }) ==
        ErrorKind::RedundantCover));
  CHECK((kindOf([] { Poset::fromCovers({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }) ==
        ErrorKind::CyclicOrder));
  CHECK((kindOf([] { Poset::fromCovers({"x"}, {{"x", "q"}}); }) == ErrorKind::UnknownElement));
  CHECK((kindOf([] { Poset::fromCovers({"x", "x"}, {}); }) == ErrorKind::DuplicateName));
}

TEST_CASE("poset meets inside up-sets") {
  auto p = catalog::noMeet();
  auto up = p.upSet(p.indexOf("o"));
  CHECK_FALSE(p.meetWithin(up, p.indexOf("r"), p.indexOf("s")));
  CHECK(p.meetWithin(up, p.indexOf("p"), p.indexOf("q")) == p.indexOf("o"));
  CHECK(p.joinWithin(p.downSet(p.indexOf("r")), p.indexOf("p"), p.indexOf("q")) ==
        p.indexOf("r"));
}

TEST_CASE("order enumeration counts") {
  // Numbers of posets: labeled 1, 1, 3, 19, 219, 4231; unlabeled 1, 1, 2, 5, 16, 63.
  const std::size_t labeled[] = {1, 1, 3, 19, 219, 4231};
  const std::size_t types[] = {1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(labeledOrders(n).size() == labeled[n]);
    CHECK(orderTypes(n).size() == types[n]);
  }
}

TEST_CASE("simplicial complexes") {
  auto k = catalog::square();
  CHECK(k.vertexCount() == 4);
  CHECK(k.faces(1).size() == 4);
  CHECK(k.faces(2).empty());
  CHECK(k.dimension() == 1);
  CHECK(k.connected());
  auto t = SimplicialComplex::fromMaximalSimplices({{"z", "x", "y"}});
  CHECK(t.vertices() == std::vector<std::string>{"x", "y", "z"});
  CHECK(t.allSimplices().size() == 7);
  CHECK(t.contains({0, 2}));
  CHECK((kindOf([] { SimplicialComplex::fromMaximalSimplices({{"x", "y"}, {"x"}}); }) ==
        ErrorKind::RedundantSimplex));
  CHECK_FALSE(SimplicialComplex::fromMaximalSimplices({{"x"}, {"y"}}).connected());
}

TEST_CASE("group presentation utilities") {
  GroupPresentation p;
  p.generators = {"x", "y"};
  GroupRelator w{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  CHECK(freelyReduce(w) == GroupRelator{{0, 1}, {0, 1}});
  CHECK(cyclicallyReduce(GroupRelator{{1, -1}, {0, 1}, {1, 1}}) == GroupRelator{{0, 1}});
  GroupRelator r{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  CHECK(canonicalRelator(r) == canonicalRelator(inverse(r)));
  std::rotate(r.begin(), r.begin() + 1, r.end());
  CHECK(canonicalRelator(r) == canonicalRelator(inverse(r)));
  p.relators = {r};
  CHECK(formatRelator(p, GroupRelator{{0, 1}, {1, -1}}) == "x y^-1");
  CHECK(abelianizationRank(p) == 2);
  p.relators = {{{0, 1}, {1, 1}}};
  CHECK(abelianizationRank(p) == 1);
  auto q = simplifyPresentation(p);
  CHECK(q.generators.size() == 1);
  CHECK(q.relators.empty());
}
