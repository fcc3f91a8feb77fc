#include "doctest.h"
#include "support.hpp"

#include "catmon/catalog.hpp"
#include "catmon/error.hpp"
#include "catmon/text_format.hpp"

#include <fstream>
#include <functional>
#include <sstream>

using namespace catmon;
using namespace testing;

namespace {

std::string readData(const std::string &name) {
  std::ifstream in(std::string(CATMON_SOURCE_DIR) + "/data/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Error errorOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorKind::Parse, "");
}

} // namespace

TEST_CASE("data files parse") {
  auto diamond = text::parsePoset(readData("diamond.poset"));
  CHECK(diamond.size() == 4);
  CHECK(text::parseComplex(readData("square.complex")).faces(1).size() == 4);
  auto c6 = validateCategory(text::parseCategory(readData("c6.category")));
  CHECK(c6.arrowCount() == 15);
  auto psi = text::parseFunctor(readData("c6.functor"), c6);
  CHECK(checkSeparation(c6, psi).passed());
  CHECK(text::parseMonoidPresentation(readData("m6.monoid")).relations.size() == 2);
  auto cancel = validateCategory(text::parseCategory(readData("cancel.category")));
  CHECK_FALSE(isRightCancellative(cancel));
  CHECK(text::header(readData("vee.poset")) == "poset");
}

TEST_CASE("comments and blank lines") {
  auto p = text::parsePoset("# a chain\nposet\n\nelem x y  # two\ncover x y\n");
  CHECK(p.size() == 2);
  CHECK(p.less(0, 1));
  // '#' inside a token is part of the name.
  auto q = text::parsePoset("poset\nelem x#1 y\n");
  CHECK(q.name(0) == "x#1");
}

TEST_CASE("parse errors carry line numbers") {
  auto e = errorOf([] { text::parsePoset("poset\nelem x\ncover x\n"); });
  CHECK((e.kind() == ErrorKind::Parse));
  CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  CHECK((errorOf([] { text::parsePoset("complex\n"); }).kind() == ErrorKind::Parse));
  CHECK((errorOf([] { text::parsePoset(""); }).kind() == ErrorKind::Parse));
  CHECK((errorOf([] { text::parseCategory("category\nobj o\nbogus x\n"); }).kind() ==
        ErrorKind::Parse));
  CHECK((errorOf([] { text::parseGroupPresentation("presentation\ngen x\nrel x y\n"); })
            .kind() == ErrorKind::UnknownGenerator));
  auto s = catalog::c6();
  auto f = errorOf([&] { text::parseFunctor("functor\ntarget zn 3\nimage a (1,0)\n", s); });
  CHECK((f.kind() == ErrorKind::GroupMismatch));
  CHECK(std::string(f.what()).find("line 3") != std::string::npos);
}

TEST_CASE("writers round-trip") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto &r : orderTypes(n)) {
      auto p = posetFrom(n, r);
      auto q = text::parsePoset(text::writePoset(p));
      CHECK(q.names() == p.names());
      CHECK(q.covers() == p.covers());
    }
  auto k = catalog::square();
  CHECK(text::parseComplex(text::writeComplex(k)).maximalSimplices() == k.maximalSimplices());

  std::vector<FiniteCategory> cats{catalog::c6(), catOfPoset(catalog::diamond()),
                                   catalog::cyclicGroupOfOrderTwo()};
  for (const auto &s : randomCategories(20, 55))
    cats.push_back(s);
  for (const auto &s : cats) {
    auto written = text::writeCategory(s);
    auto t = validateCategory(text::parseCategory(written));
    REQUIRE(t.arrowCount() == s.arrowCount());
    for (std::size_t f = 0; f < s.arrowCount(); ++f) {
      CHECK(t.arrowName(ArrowId(f)) == s.arrowName(ArrowId(f)));
      for (std::size_t g = 0; g < s.arrowCount(); ++g)
        CHECK(t.compose(ArrowId(f), ArrowId(g)) == s.compose(ArrowId(f), ArrowId(g)));
    }
    CHECK(text::writeCategory(t) == written);
  }

  auto c6 = catalog::c6();
  auto psi = catalog::c6Functor(c6);
  auto psi2 = text::parseFunctor(text::writeFunctor(c6, psi), c6);
  CHECK(psi2.images == psi.images);

  auto pres = universalGroupPresentation(catOfPoset(catalog::diamond()));
  auto pres2 = text::parseGroupPresentation(text::writeGroupPresentation(pres));
  CHECK(pres2.generators == pres.generators);
  CHECK(pres2.relators == pres.relators);

  auto m6 = catalog::m6Presentation();
  auto m62 = text::parseMonoidPresentation(text::writeMonoidPresentation(m6));
  CHECK(m62.generators == m6.generators);
  CHECK(m62.relations == m6.relations);
}

TEST_CASE("maps between posets") {
  auto d = catalog::diamond();
  auto c = catalog::chain(3);
  auto f = text::parseMap("map\nsend 0 0\nsend a 1\nsend b 1\nsend 1 2\n", d, c);
  CHECK(f.images() == std::vector<std::size_t>{0, 1, 1, 2});
}
