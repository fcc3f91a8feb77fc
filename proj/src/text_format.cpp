#include "catmon/text_format.hpp"

#include "catmon/error.hpp"

#include <sstream>
#include <vector>

namespace catmon::text {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string token;
    while (words >> token) {
      if (token.front() == '#')
        break;
      line.tokens.push_back(token);
    }
    if (!line.tokens.empty())
      out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line &line, const std::string &what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line.number) + ": " + what);
}

std::vector<Line> body(std::string_view text, const std::string &expected) {
  auto all = lines(text);
  if (all.empty())
    throw Error(ErrorKind::Parse, "empty input, expected a " + expected + " file");
  const Line &head = all.front();
  if (head.tokens.size() != 1 || head.tokens.front() != expected)
    fail(head, "expected header '" + expected + "'");
  all.erase(all.begin());
  return all;
}

void requireCount(const Line &line, std::size_t count) {
  if (line.tokens.size() != count)
    fail(line, "'" + line.tokens.front() + "' takes " + std::to_string(count - 1) +
                   " argument(s)");
}

std::string joinTail(const Line &line, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < line.tokens.size(); ++i)
    out += (out.empty() ? "" : " ") + line.tokens[i];
  return out;
}

// Errors from the model get the line number prefixed.
template <class F> auto at(const Line &line, F &&f) {
  try {
    return f();
  } catch (const Error &e) {
    throw Error(e.kind(), "line " + std::to_string(line.number) + ": " + e.what());
  }
}

} // namespace

std::string header(std::string_view text) {
  auto all = lines(text);
  if (all.empty())
    throw Error(ErrorKind::Parse, "empty input");
  return all.front().tokens.front();
}

Poset parsePoset(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto &line : body(text, "poset")) {
    const auto &kw = line.tokens.front();
    if (kw == "elem") {
      if (line.tokens.size() < 2)
        fail(line, "'elem' needs at least one element");
      elements.insert(elements.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (kw == "cover") {
      requireCount(line, 3);
      covers.emplace_back(line.tokens[1], line.tokens[2]);
    } else {
      fail(line, "unknown directive '" + kw + "'");
    }
  }
  return Poset::fromCovers(std::move(elements), covers);
}

std::string writePoset(const Poset &p) {
  std::string out = "poset\n";
  if (p.size()) {
    out += "elem";
    for (const auto &n : p.names())
      out += " " + n;
    out += "\n";
  }
  for (const auto &[x, y] : p.covers())
    out += "cover " + p.name(x) + " " + p.name(y) + "\n";
  return out;
}

SimplicialComplex parseComplex(std::string_view text) {
  std::vector<std::vector<std::string>> simplices;
  for (const auto &line : body(text, "complex")) {
    if (line.tokens.front() != "simplex")
      fail(line, "unknown directive '" + line.tokens.front() + "'");
    if (line.tokens.size() < 2)
      fail(line, "'simplex' needs at least one vertex");
    simplices.emplace_back(line.tokens.begin() + 1, line.tokens.end());
  }
  return SimplicialComplex::fromMaximalSimplices(simplices);
}

std::string writeComplex(const SimplicialComplex &k) {
  std::string out = "complex\n";
  for (const auto &s : k.maximalSimplices()) {
    out += "simplex";
    for (std::size_t v : s)
      out += " " + k.vertexName(v);
    out += "\n";
  }
  return out;
}

CategoryDescription parseCategory(std::string_view text) {
  CategoryDescription d;
  for (const auto &line : body(text, "category")) {
    const auto &kw = line.tokens.front();
    if (kw == "obj") {
      if (line.tokens.size() < 2)
        fail(line, "'obj' needs at least one object");
      d.objects.insert(d.objects.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (kw == "arrow") {
      requireCount(line, 4);
      d.arrows.push_back({line.tokens[1], line.tokens[2], line.tokens[3]});
    } else if (kw == "comp") {
      requireCount(line, 4);
      d.composites.push_back({line.tokens[1], line.tokens[2], line.tokens[3]});
    } else if (kw == "ident") {
      requireCount(line, 3);
      if (!d.identityNames.emplace(line.tokens[1], line.tokens[2]).second)
        fail(line, "identity of '" + line.tokens[1] + "' named twice");
    } else {
      fail(line, "unknown directive '" + kw + "'");
    }
  }
  return d;
}

std::string writeCategory(const FiniteCategory &s) {
  std::string out = "category\n";
  if (s.objectCount()) {
    out += "obj";
    for (std::size_t o = 0; o < s.objectCount(); ++o)
      out += " " + s.objectName(ObjectId(o));
    out += "\n";
  }
  for (std::size_t o = 0; o < s.objectCount(); ++o) {
    const auto &name = s.arrowName(ArrowId(o));
    if (name != "id:" + s.objectName(ObjectId(o)))
      out += "ident " + s.objectName(ObjectId(o)) + " " + name + "\n";
  }
  for (std::size_t a = s.objectCount(); a < s.arrowCount(); ++a)
    out += "arrow " + s.arrowName(ArrowId(a)) + " " +
           s.objectName(s.source(ArrowId(a))) + " " +
           s.objectName(s.target(ArrowId(a))) + "\n";
  for (std::size_t f = s.objectCount(); f < s.arrowCount(); ++f)
    for (ArrowId g : s.arrowsFrom(s.target(ArrowId(f)))) {
      if (s.isIdentity(g))
        continue;
      out += "comp " + s.arrowName(ArrowId(f)) + " " + s.arrowName(g) + " " +
             s.arrowName(*s.compose(ArrowId(f), g)) + "\n";
    }
  return out;
}

IsotoneMap parseMap(std::string_view text, const Poset &from, const Poset &to) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto &line : body(text, "map")) {
    if (line.tokens.front() != "send")
      fail(line, "unknown directive '" + line.tokens.front() + "'");
    requireCount(line, 3);
    pairs.emplace_back(line.tokens[1], line.tokens[2]);
  }
  return IsotoneMap::fromPairs(from, to, pairs);
}

CategoryFunctor parseFunctor(std::string_view text, const FiniteCategory &s) {
  std::optional<GroupSpec> target;
  std::vector<std::pair<std::string, GroupWord>> images;
  for (const auto &line : body(text, "functor")) {
    const auto &kw = line.tokens.front();
    if (kw == "target") {
      if (target)
        fail(line, "target given twice");
      if (line.tokens.size() == 3 && line.tokens[1] == "zn") {
        try {
          std::size_t used = 0;
          unsigned long n = std::stoul(line.tokens[2], &used);
          if (used != line.tokens[2].size())
            throw std::invalid_argument("");
          target = GroupSpec::freeAbelian(n);
        } catch (const std::logic_error &) {
          fail(line, "bad dimension '" + line.tokens[2] + "'");
        }
      } else if (line.tokens.size() >= 2 && line.tokens[1] == "free") {
        target = GroupSpec::free({line.tokens.begin() + 2, line.tokens.end()});
      } else {
        fail(line, "expected 'target zn <n>' or 'target free <letters>'");
      }
    } else if (kw == "image") {
      if (!target)
        fail(line, "image before target");
      if (line.tokens.size() < 3)
        fail(line, "'image' needs an arrow and a value");
      images.emplace_back(line.tokens[1],
                          at(line, [&] { return parseGroupElement(*target, joinTail(line, 2)); }));
    } else {
      fail(line, "unknown directive '" + kw + "'");
    }
  }
  if (!target)
    throw Error(ErrorKind::Parse, "functor file has no target line");
  return makeFunctor(s, *target, images);
}

std::string writeFunctor(const FiniteCategory &s, const CategoryFunctor &f) {
  std::string out = "functor\n";
  if (f.target.kind == GroupSpec::Kind::FreeAbelian) {
    out += "target zn " + std::to_string(f.target.dimension) + "\n";
  } else if (f.target.kind == GroupSpec::Kind::Free) {
    out += "target free";
    for (const auto &l : f.target.letters)
      out += " " + l;
    out += "\n";
  } else {
    throw Error(ErrorKind::GroupMismatch, "free product targets have no file form");
  }
  for (std::size_t a = s.objectCount(); a < s.arrowCount(); ++a)
    if (f.images[a])
      out += "image " + s.arrowName(ArrowId(a)) + " " + formatWord(f.target, *f.images[a]) +
             "\n";
  return out;
}

GroupPresentation parseGroupPresentation(std::string_view text) {
  GroupPresentation p;
  std::vector<const Line *> rels;
  auto all = body(text, "presentation");
  for (const auto &line : all) {
    const auto &kw = line.tokens.front();
    if (kw == "gen") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (p.findGenerator(line.tokens[i]))
          fail(line, "generator '" + line.tokens[i] + "' listed twice");
        p.generators.push_back(line.tokens[i]);
      }
    } else if (kw == "rel") {
      rels.push_back(&line);
    } else {
      fail(line, "unknown directive '" + kw + "'");
    }
  }
  for (const Line *line : rels) {
    GroupRelator r;
    for (std::size_t i = 1; i < line->tokens.size(); ++i) {
      std::string name = line->tokens[i];
      int exponent = 1;
      if (name.size() > 3 && name.ends_with("^-1")) {
        name.resize(name.size() - 3);
        exponent = -1;
      }
      auto g = p.findGenerator(name);
      if (!g) {
        if (name == "1" && exponent == 1)
          continue;
        throw Error(ErrorKind::UnknownGenerator, "line " + std::to_string(line->number) +
                                                     ": unknown generator '" + name + "'");
      }
      r.push_back({*g, exponent});
    }
    p.relators.push_back(std::move(r));
  }
  return p;
}

std::string writeGroupPresentation(const GroupPresentation &p) {
  std::string out = "presentation\n";
  if (!p.generators.empty()) {
    out += "gen";
    for (const auto &g : p.generators)
      out += " " + g;
    out += "\n";
  }
  for (const auto &r : p.relators)
    out += "rel " + formatRelator(p, r) + "\n";
  return out;
}

MonoidPresentation parseMonoidPresentation(std::string_view text) {
  MonoidPresentation p;
  std::vector<const Line *> rels;
  auto all = body(text, "monoid");
  for (const auto &line : all) {
    const auto &kw = line.tokens.front();
    if (kw == "gen") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (p.findGenerator(line.tokens[i]))
          fail(line, "generator '" + line.tokens[i] + "' listed twice");
        p.generators.push_back(line.tokens[i]);
      }
    } else if (kw == "rel") {
      rels.push_back(&line);
    } else {
      fail(line, "unknown directive '" + kw + "'");
    }
  }
  for (const Line *line : rels) {
    std::vector<std::string> sides(1);
    for (std::size_t i = 1; i < line->tokens.size(); ++i) {
      if (line->tokens[i] == "=") {
        sides.emplace_back();
        continue;
      }
      sides.back() += (sides.back().empty() ? "" : " ") + line->tokens[i];
    }
    if (sides.size() != 2)
      fail(*line, "expected 'rel <word> = <word>'");
    p.relations.emplace_back(at(*line, [&] { return parseMonoidWord(p, sides[0]); }),
                             at(*line, [&] { return parseMonoidWord(p, sides[1]); }));
  }
  return p;
}

std::string writeMonoidPresentation(const MonoidPresentation &p) {
  std::string out = "monoid\n";
  if (!p.generators.empty()) {
    out += "gen";
    for (const auto &g : p.generators)
      out += " " + g;
    out += "\n";
  }
  for (const auto &[u, v] : p.relations)
    out += "rel " + formatMonoidWord(p, u) + " = " + formatMonoidWord(p, v) + "\n";
  return out;
}

} // namespace catmon::text
