#include "catmon/catalog.hpp"

#include <string>

namespace catmon::catalog {

Poset diamond() {
  return Poset::fromCovers({"0", "a", "b", "1"},
                           {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

Poset vee() { return Poset::fromCovers({"o", "p", "q"}, {{"o", "p"}, {"o", "q"}}); }

Poset noMeet() {
  return Poset::fromCovers({"o", "p", "q", "r", "s"}, {{"o", "p"},
                                                       {"o", "q"},
                                                       {"p", "r"},
                                                       {"p", "s"},
                                                       {"q", "r"},
                                                       {"q", "s"}});
}

Poset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i)
      covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return Poset::fromCovers(std::move(names), covers);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::to_string(i));
  return Poset::fromCovers(std::move(names), {});
}

SimplicialComplex square() {
  return SimplicialComplex::fromMaximalSimplices(
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

CategoryDescription c6Description() {
  CategoryDescription d;
  d.objects = {"0", "1", "2"};
  for (const char *n : {"a", "b", "c"})
    d.arrows.push_back({n, "0", "1"});
  for (const char *n : {"a'", "b'", "c'"})
    d.arrows.push_back({n, "1", "2"});
  for (const char *n : {"aa'", "bb'", "cc'", "abar", "bbar", "cbar"})
    d.arrows.push_back({n, "0", "2"});
  d.composites = {
      {"a", "a'", "aa'"},  {"b", "b'", "bb'"},  {"c", "c'", "cc'"},
      {"a", "b'", "cbar"}, {"b", "a'", "cbar"}, {"b", "c'", "abar"},
      {"c", "b'", "abar"}, {"a", "c'", "bbar"}, {"c", "a'", "bbar"},
  };
  return d;
}

FiniteCategory c6() { return validateCategory(c6Description()); }

CategoryFunctor c6Functor(const FiniteCategory &c6) {
  GroupSpec z3 = GroupSpec::freeAbelian(3);
  auto v = [](long long x, long long y, long long z) {
    return GroupWord{GroupWord::Vector{x, y, z}};
  };
  return makeFunctor(c6, z3,
                     {{"a", v(1, 0, 0)},
                      {"a'", v(1, 0, 0)},
                      {"b", v(0, 1, 0)},
                      {"b'", v(0, 1, 0)},
                      {"c", v(0, 0, 1)},
                      {"c'", v(0, 0, 1)},
                      {"aa'", v(2, 0, 0)},
                      {"bb'", v(0, 2, 0)},
                      {"cc'", v(0, 0, 2)},
                      {"abar", v(0, 1, 1)},
                      {"bbar", v(1, 0, 1)},
                      {"cbar", v(1, 1, 0)}});
}

CategoryDescription cancellationCounterexampleDescription() {
  CategoryDescription d;
  d.objects = {"e0", "e1", "e2"};
  d.arrows = {{"a", "e0", "e1"}, {"b", "e0", "e1"}, {"c", "e1", "e2"}, {"ac", "e0", "e2"}};
  d.composites = {{"a", "c", "ac"}, {"b", "c", "ac"}};
  return d;
}

FiniteCategory cancellationCounterexample() {
  return validateCategory(cancellationCounterexampleDescription());
}

FiniteCategory cyclicGroupOfOrderTwo() {
  CategoryDescription d;
  d.objects = {"o"};
  d.arrows = {{"g", "o", "o"}};
  d.composites = {{"g", "g", "id:o"}};
  return validateCategory(d);
}

namespace {

MonoidPresentation presentation(std::vector<std::string> generators,
                                const std::vector<std::pair<std::string, std::string>> &rels) {
  MonoidPresentation p;
  p.generators = std::move(generators);
  for (const auto &[u, v] : rels)
    p.relations.emplace_back(parseMonoidWord(p, u), parseMonoidWord(p, v));
  return p;
}

} // namespace

MonoidPresentation c6Presentation() {
  return presentation({"a", "b", "c", "a'", "b'", "c'"},
                      {{"a b'", "b a'"}, {"b c'", "c b'"}, {"a c'", "c a'"}});
}

MonoidPresentation m6Presentation() {
  return presentation({"a", "b", "c", "d", "e", "f"}, {{"a e", "c b"}, {"d a", "b f"}});
}

MonoidPresentation b3Presentation() {
  return presentation({"a", "b"}, {{"a b a", "b a b"}});
}

} // namespace catmon::catalog
