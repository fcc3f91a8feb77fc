#include "catmon/cli.hpp"

#include "catmon/catalog.hpp"
#include "catmon/error.hpp"
#include "catmon/homotopy.hpp"
#include "catmon/interval.hpp"
#include "catmon/spindle.hpp"
#include "catmon/text_format.hpp"
#include "catmon/universal_monoid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace catmon::cli {

namespace {

using nlohmann::ordered_json;

struct Report {
  std::string text;
  ordered_json json = ordered_json::object();
  int code = 0;
};

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ValidateOptions validateOptions() {
  ValidateOptions o;
  if (const char *env = std::getenv("CATMON_MAX_ARROWS")) {
    try {
      std::size_t used = 0;
      o.maxArrows = std::stoull(env, &used);
      if (used != std::string(env).size())
        throw std::invalid_argument(env);
    } catch (const std::logic_error &) {
      throw Error(ErrorKind::Parse, std::string("bad CATMON_MAX_ARROWS value '") + env + "'");
    }
  }
  return o;
}

// A category file, or a poset file standing for its interval category.
FiniteCategory loadCategory(const std::string &path) {
  std::string text = readFile(path);
  std::string kind = text::header(text);
  if (kind == "poset")
    return catOfPoset(text::parsePoset(text), validateOptions());
  if (kind == "category")
    return validateCategory(text::parseCategory(text), validateOptions());
  throw Error(ErrorKind::Parse, "'" + path + "' is a " + kind +
                                    " file, expected a category or poset");
}

Poset loadPoset(const std::string &path) { return text::parsePoset(readFile(path)); }

SimplicialComplex loadComplexOrChains(const std::string &path) {
  std::string text = readFile(path);
  if (text::header(text) == "poset")
    return chainComplex(text::parsePoset(text));
  return text::parseComplex(text);
}

MonoidPresentation loadMonoid(const std::string &path) {
  auto p = text::parseMonoidPresentation(readFile(path));
  p.validate();
  return p;
}

const char *yesNo(bool b) { return b ? "yes" : "no"; }
const char *upper(bool b) { return b ? "YES" : "NO"; }

Side parseSide(const std::string &s) { return s == "right" ? Side::Right : Side::Left; }

ReducedSeq element(const FiniteCategory &s, const std::string &word) {
  return normalForm(s, parseArrowWord(s, word));
}

std::string seqText(const FiniteCategory &s, std::span<const ArrowId> seq) {
  if (seq.empty())
    return "1";
  std::string out;
  for (ArrowId a : seq)
    out += (out.empty() ? "" : " ") + s.arrowName(a);
  return out;
}

std::string elementName(const Poset &p, std::size_t x) { return p.name(x); }

ordered_json jsonWords(const FiniteCategory &s, std::span<const ArrowId> seq) {
  ordered_json a = ordered_json::array();
  for (ArrowId x : seq)
    a.push_back(s.arrowName(x));
  return a;
}

std::size_t elementIndex(const Poset &p, const std::string &name) { return p.indexOf(name); }

// ---- commands ----

Report cmdValidate(const std::string &path) {
  std::string content = readFile(path);
  std::string kind = text::header(content);
  Report r;
  r.json["file"] = kind;
  std::ostringstream t;
  if (kind == "poset") {
    auto p = text::parsePoset(content);
    t << "poset: " << p.size() << " elements, " << p.covers().size() << " covers\n";
    r.json["elements"] = p.size();
    r.json["covers"] = p.covers().size();
  } else if (kind == "complex") {
    auto k = text::parseComplex(content);
    t << "complex: " << k.vertexCount() << " vertices, " << k.maximalSimplices().size()
      << " maximal simplices, dimension " << k.dimension() << "\n";
    r.json["vertices"] = k.vertexCount();
    r.json["maximalSimplices"] = k.maximalSimplices().size();
    r.json["dimension"] = k.dimension();
  } else if (kind == "category") {
    auto s = validateCategory(text::parseCategory(content), validateOptions());
    t << "category: " << s.objectCount() << " objects, " << s.arrowCount()
      << " arrows (" << s.objectCount() << " identities)\n";
    t << "conical: " << yesNo(s.conical()) << "  left cancellative: "
      << yesNo(s.leftCancellative()) << "  right cancellative: "
      << yesNo(s.rightCancellative()) << "\n";
    r.json["objects"] = s.objectCount();
    r.json["arrows"] = s.arrowCount();
    r.json["conical"] = s.conical();
    r.json["leftCancellative"] = s.leftCancellative();
    r.json["rightCancellative"] = s.rightCancellative();
  } else if (kind == "presentation") {
    auto p = text::parseGroupPresentation(content);
    t << "presentation: " << p.generators.size() << " generators, " << p.relators.size()
      << " relators\n";
    r.json["generators"] = p.generators.size();
    r.json["relators"] = p.relators.size();
  } else if (kind == "monoid") {
    auto p = loadMonoid(path);
    t << "monoid: " << p.generators.size() << " generators, " << p.relations.size()
      << " relations, homogeneous: " << yesNo(p.homogeneous()) << "\n";
    r.json["generators"] = p.generators.size();
    r.json["relations"] = p.relations.size();
    r.json["homogeneous"] = p.homogeneous();
  } else {
    throw Error(ErrorKind::Parse, "'" + kind + "' files cannot be validated on their own");
  }
  r.json["valid"] = true;
  r.text = t.str();
  return r;
}

Report cmdNf(const std::string &path, const std::string &word, bool trace) {
  auto s = loadCategory(path);
  auto raw = parseArrowWord(s, word);
  auto red = reduce(s, raw);
  Report r;
  std::ostringstream t;
  ordered_json steps = ordered_json::array();
  if (trace) {
    std::vector<ArrowId> current = raw;
    t << "input: " << seqText(s, current) << "\n";
    for (const auto &step : red.trace) {
      current = applyStep(s, current, step);
      const char *kind =
          step.kind == RewriteStep::Kind::Compose ? "compose" : "drop identity";
      t << kind << " at " << step.position << ": " << seqText(s, current) << "\n";
      steps.push_back({{"kind", kind}, {"position", step.position}});
    }
  }
  t << format(s, red.result) << "\n";
  r.text = t.str();
  r.json["normalForm"] = jsonWords(s, red.result.arrows());
  if (trace)
    r.json["trace"] = steps;
  return r;
}

Report cmdMult(const std::string &path, const std::string &x, const std::string &y) {
  auto s = loadCategory(path);
  auto p = multiply(s, element(s, x), element(s, y));
  Report r;
  r.text = format(s, p) + "\n";
  r.json["product"] = jsonWords(s, p.arrows());
  return r;
}

Report cmdGcd(const std::string &path, const std::vector<std::string> &words,
              const std::string &sideName) {
  auto s = loadCategory(path);
  std::vector<ReducedSeq> xs;
  for (const auto &w : words)
    xs.push_back(element(s, w));
  auto g = gcdFamily(parseSide(sideName), xs, s);
  Report r;
  r.json["side"] = sideName;
  if (g) {
    r.text = format(s, *g) + "\n";
    r.json["gcd"] = jsonWords(s, g->arrows());
  } else {
    r.text = "none\n";
    r.json["gcd"] = nullptr;
  }
  return r;
}

Report cmdLcm(const std::string &path, const std::string &x, const std::string &y,
              const std::string &sideName) {
  auto s = loadCategory(path);
  auto m = lcmPair(parseSide(sideName), element(s, x), element(s, y), s);
  Report r;
  r.json["side"] = sideName;
  if (m) {
    r.text = format(s, *m) + "\n";
    r.json["lcm"] = jsonWords(s, m->arrows());
  } else {
    r.text = "none\n";
    r.json["lcm"] = nullptr;
  }
  return r;
}

Report cmdGreedy(const std::string &path, const std::string &word) {
  auto s = loadCategory(path);
  auto x = element(s, word);
  Report r;
  try {
    auto entries = greedyNormalForm(x, s);
    std::string joined;
    for (ArrowId a : entries)
      joined += (joined.empty() ? "" : " | ") + s.arrowName(a);
    r.text = "greedy: " + (joined.empty() ? std::string("1") : joined) + "\n";
    r.json["greedy"] = jsonWords(s, entries);
    r.json["confirmed"] = true;
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::GreedyViolation)
      throw;
    r.text = std::string("greedy property fails: ") + e.what() + "\n";
    r.json["confirmed"] = false;
    r.json["reason"] = e.what();
    r.code = 1;
  }
  return r;
}

Report gcdCategoryReport(const FiniteCategory &s) {
  auto rep = isGcdCategory(s);
  Report r;
  std::ostringstream t;
  t << "conical: " << yesNo(rep.conical) << "  left cancellative: "
    << yesNo(rep.leftCancellative) << "  right cancellative: "
    << yesNo(rep.rightCancellative) << "\n";
  t << "left gcds: " << yesNo(rep.leftGcds) << "  right gcds: " << yesNo(rep.rightGcds)
    << "\n";
  if (rep.leftFailure)
    t << "no left gcd: " << s.arrowName(rep.leftFailure->first) << " and "
      << s.arrowName(rep.leftFailure->second) << "\n";
  if (rep.rightFailure)
    t << "no right gcd: " << s.arrowName(rep.rightFailure->first) << " and "
      << s.arrowName(rep.rightFailure->second) << "\n";
  t << "gcd-category: " << upper(rep.overall()) << "\n";
  r.text = t.str();
  r.json["conical"] = rep.conical;
  r.json["leftCancellative"] = rep.leftCancellative;
  r.json["rightCancellative"] = rep.rightCancellative;
  r.json["leftGcds"] = rep.leftGcds;
  r.json["rightGcds"] = rep.rightGcds;
  if (rep.leftFailure)
    r.json["leftFailure"] = {s.arrowName(rep.leftFailure->first),
                             s.arrowName(rep.leftFailure->second)};
  if (rep.rightFailure)
    r.json["rightFailure"] = {s.arrowName(rep.rightFailure->first),
                              s.arrowName(rep.rightFailure->second)};
  r.json["gcdCategory"] = rep.overall();
  r.code = rep.overall() ? 0 : 1;
  return r;
}

Report cmdCheckCategory(const std::string &path) { return gcdCategoryReport(loadCategory(path)); }

Report cmdCheckGcdMonoid(const std::string &path) {
  std::string content = readFile(path);
  Report r;
  std::ostringstream t;
  if (text::header(content) == "poset") {
    auto p = text::parsePoset(content);
    auto rep = gcdCriterion(p);
    t << "left: " << (rep.leftOK ? "OK" : "FAIL") << "  right: "
      << (rep.rightOK ? "OK" : "FAIL") << "  gcd-monoid: " << upper(rep.overall()) << "\n";
    auto witness = [&](const char *label, const char *what, const auto &w) {
      t << label << " witness: " << elementName(p, w[0]) << " (" << elementName(p, w[1])
        << ", " << elementName(p, w[2]) << " have no " << what << ")\n";
      return ordered_json{elementName(p, w[0]), elementName(p, w[1]), elementName(p, w[2])};
    };
    r.json["left"] = rep.leftOK;
    r.json["right"] = rep.rightOK;
    if (rep.leftWitness)
      r.json["leftWitness"] = witness("left", "meet above it", *rep.leftWitness);
    if (rep.rightWitness)
      r.json["rightWitness"] = witness("right", "join below it", *rep.rightWitness);
    r.json["gcdMonoid"] = rep.overall();
    r.code = rep.overall() ? 0 : 1;
  } else {
    auto s = loadCategory(path);
    auto rep = isGcdCategory(s);
    t << "left: " << (rep.leftGcdCategory() ? "OK" : "FAIL")
      << "  right: " << (rep.rightGcdCategory() ? "OK" : "FAIL")
      << "  gcd-monoid: " << upper(rep.overall()) << "\n";
    r.json["left"] = rep.leftGcdCategory();
    r.json["right"] = rep.rightGcdCategory();
    r.json["gcdMonoid"] = rep.overall();
    r.code = rep.overall() ? 0 : 1;
  }
  r.text = t.str();
  return r;
}

Report fileReport(const std::string &kind, std::string content) {
  Report r;
  r.json["format"] = kind;
  r.json["text"] = content;
  r.text = std::move(content);
  return r;
}

Report cmdBarycentric(const std::string &path) {
  return fileReport("poset", text::writePoset(barycentric(text::parseComplex(readFile(path)))));
}

Report cmdChainComplex(const std::string &path) {
  return fileReport("complex", text::writeComplex(chainComplex(loadPoset(path))));
}

ordered_json presentationJson(const GroupPresentation &p) {
  ordered_json rels = ordered_json::array();
  for (const auto &rel : p.relators)
    rels.push_back(formatRelator(p, rel));
  return {{"generators", p.generators}, {"relators", rels}};
}

Report cmdHomotopy(const std::string &path) {
  auto d = floatingDecomposition(loadComplexOrChains(path));
  Report r;
  std::ostringstream t;
  t << "tree edges: " << d.treeEdgeCount << "  pi1: ";
  if (d.pi1FreeRank)
    t << "free rank " << *d.pi1FreeRank << "  HG free rank: " << *d.totalFreeRank << "\n";
  else
    t << d.pi1.generators.size() << " generators, " << d.pi1.relators.size()
      << " relators  HG free rank: unknown\n"
      << text::writeGroupPresentation(d.pi1);
  r.text = t.str();
  r.json["edges"] = d.edgeCount;
  r.json["treeEdges"] = d.treeEdgeCount;
  r.json["pi1"] = presentationJson(d.pi1);
  r.json["pi1FreeRank"] = d.pi1FreeRank ? ordered_json(*d.pi1FreeRank) : ordered_json();
  r.json["hgFreeRank"] = d.totalFreeRank ? ordered_json(*d.totalFreeRank) : ordered_json();
  return r;
}

Report cmdCrossCheck(const std::string &path) {
  auto rep = crossCheckMeasVal(loadPoset(path));
  Report r;
  std::ostringstream t;
  t << "floating free rank: "
    << (rep.floating.totalFreeRank ? std::to_string(*rep.floating.totalFreeRank) : "unknown")
    << "  universal group abelian rank: " << rep.universalGroupAbelianRank
    << "  agree: " << upper(rep.agree) << "\n";
  r.text = t.str();
  r.json["floatingFreeRank"] =
      rep.floating.totalFreeRank ? ordered_json(*rep.floating.totalFreeRank) : ordered_json();
  r.json["universalGroupAbelianRank"] = rep.universalGroupAbelianRank;
  r.json["agree"] = rep.agree;
  r.code = rep.agree ? 0 : 1;
  return r;
}

Report cmdSpindleDetect(const std::string &path, const std::string &u, const std::string &v) {
  auto p = loadPoset(path);
  auto sp = detectSpindle(p, elementIndex(p, u), elementIndex(p, v));
  Report r;
  std::ostringstream t;
  r.json["spindle"] = sp.has_value();
  if (!sp) {
    t << "spindle: NO\n";
  } else {
    bool extreme = isExtremeSpindle(p, *sp);
    t << "spindle: YES  extreme: " << upper(extreme) << "\n";
    ordered_json chains = ordered_json::array();
    for (const auto &c : sp->chains) {
      t << "chain:";
      ordered_json names = ordered_json::array();
      for (std::size_t x : c) {
        t << " " << p.name(x);
        names.push_back(p.name(x));
      }
      t << "\n";
      chains.push_back(names);
    }
    r.json["extreme"] = extreme;
    r.json["chains"] = chains;
  }
  r.text = t.str();
  return r;
}

Spindle requireSpindle(const Poset &p, const std::string &u, const std::string &v) {
  auto sp = detectSpindle(p, elementIndex(p, u), elementIndex(p, v));
  if (!sp)
    throw Error(ErrorKind::Precondition, "[" + u + "," + v + "] is not a spindle");
  return *sp;
}

Report cmdSpindleCategory(const std::string &path, const std::string &u, const std::string &v) {
  auto p = loadPoset(path);
  return fileReport("category",
                    text::writeCategory(spindleCategory(p, requireSpindle(p, u, v),
                                                        validateOptions())));
}

Report cmdSpindlePresentation(const std::string &path, const std::string &u,
                              const std::string &v) {
  auto p = loadPoset(path);
  return fileReport("monoid", text::writeMonoidPresentation(
                                  spindleMonoidPresentation(p, requireSpindle(p, u, v))));
}

Report cmdEmbedCheck(const std::string &path, const std::string &functorPath,
                     std::size_t maxLen) {
  auto s = loadCategory(path);
  CategoryFunctor psi =
      functorPath.empty() ? trivialFunctor(s) : text::parseFunctor(readFile(functorPath), s);
  auto rep = embeddabilityVerdict(s, psi, maxLen);
  Report r;
  std::ostringstream t;
  t << "functorial: " << yesNo(rep.separation.functorial)
    << "  separating: " << yesNo(rep.separation.separating) << "\n";
  if (rep.separation.functorialityFailure) {
    auto [f, g] = *rep.separation.functorialityFailure;
    t << "not functorial at " << s.arrowName(f) << " then " << s.arrowName(g) << "\n";
    r.json["functorialityFailure"] = {s.arrowName(f), s.arrowName(g)};
  }
  if (rep.separation.violatingPair) {
    auto [x, y] = *rep.separation.violatingPair;
    t << "same image: " << s.arrowName(x) << " and " << s.arrowName(y) << "\n";
    r.json["violatingPair"] = {s.arrowName(x), s.arrowName(y)};
  }
  r.json["functorial"] = rep.separation.functorial;
  r.json["separating"] = rep.separation.separating;
  r.json["maxLen"] = maxLen;
  if (rep.separation.passed()) {
    t << "sigma sampled up to length " << maxLen << ": " << rep.sampledElements
      << " elements, " << (rep.sampledInjective ? "injective" : "NOT injective") << "\n";
    if (rep.collision)
      t << "collision: " << format(s, rep.collision->first) << " and "
        << format(s, rep.collision->second) << "\n";
    r.json["sampledElements"] = rep.sampledElements;
    r.json["sampledInjective"] = rep.sampledInjective;
  }
  if (rep.embeds)
    t << "verdict: universal monoid embeds into a group (sampled)\n";
  else
    t << "verdict: criterion not satisfied by this functor\n";
  r.json["embeds"] = rep.embeds;
  r.text = t.str();
  r.code = rep.embeds ? 0 : 1;
  return r;
}

Report cmdMonoidClass(const std::string &path, const std::string &word) {
  auto p = loadMonoid(path);
  auto cls = congruenceClass(parseMonoidWord(p, word), p);
  Report r;
  std::ostringstream t;
  t << "class size: " << cls.size() << "\n";
  ordered_json members = ordered_json::array();
  for (const auto &w : cls) {
    t << formatMonoidWord(p, w) << "\n";
    members.push_back(formatMonoidWord(p, w));
  }
  r.text = t.str();
  r.json["size"] = cls.size();
  r.json["members"] = members;
  return r;
}

Report cmdMonoidEqual(const std::string &path, const std::string &u, const std::string &v) {
  auto p = loadMonoid(path);
  bool eq = equalInMonoid(parseMonoidWord(p, u), parseMonoidWord(p, v), p);
  Report r;
  r.text = std::string("equal: ") + upper(eq) + "\n";
  r.json["equal"] = eq;
  return r;
}

Report cmdMonoidAtoms(const std::string &path) {
  auto p = loadMonoid(path);
  auto rep = atoms(p);
  Report r;
  std::ostringstream t;
  t << "atoms:";
  ordered_json atomList = ordered_json::array();
  for (std::size_t g : rep.atoms) {
    t << " " << p.generators[g];
    atomList.push_back(p.generators[g]);
  }
  t << "\nclasses:";
  ordered_json classes = ordered_json::array();
  for (const auto &c : rep.classes) {
    t << " {";
    ordered_json names = ordered_json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      t << (i ? "," : "") << p.generators[c[i]];
      names.push_back(p.generators[c[i]]);
    }
    t << "}";
    classes.push_back(names);
  }
  t << "\n";
  r.text = t.str();
  r.json["atoms"] = atomList;
  r.json["classes"] = classes;
  return r;
}

Report cmdMonoidCrm(const std::string &path, const std::vector<std::string> &words,
                    std::size_t maxLen) {
  auto p = loadMonoid(path);
  std::vector<MonoidWord> xs;
  for (const auto &w : words)
    xs.push_back(parseMonoidWord(p, w));
  auto m = commonRightMultiple(xs, p, maxLen);
  Report r;
  r.json["maxLen"] = maxLen;
  if (m) {
    r.text = "common right multiple: " + formatMonoidWord(p, *m) + "\n";
    r.json["multiple"] = formatMonoidWord(p, *m);
  } else {
    r.text = "common right multiple: none up to length " + std::to_string(maxLen) + "\n";
    r.json["multiple"] = nullptr;
  }
  return r;
}

Report cmdMonoidM6(std::size_t maxLen) {
  auto rep = verifyM6Embedding(maxLen);
  auto m6 = catalog::m6Presentation();
  Report r;
  std::ostringstream t;
  ordered_json rels = ordered_json::array();
  for (std::size_t i = 0; i < m6.relations.size(); ++i) {
    const auto &[u, v] = m6.relations[i];
    const auto &[iu, iv] = rep.relationImages[i];
    t << "relation " << formatMonoidWord(m6, u) << " = " << formatMonoidWord(m6, v)
      << ": " << iu << " = " << iv << "  " << (iu == iv ? "holds" : "FAILS") << "\n";
    rels.push_back({{"lhs", iu}, {"rhs", iv}});
  }
  t << "injective on classes up to length " << maxLen << ": " << upper(rep.injective)
    << " (" << rep.classesChecked << " classes)\n";
  if (rep.collision)
    t << "collision: " << formatMonoidWord(m6, rep.collision->first) << " and "
      << formatMonoidWord(m6, rep.collision->second) << "\n";
  r.text = t.str();
  r.json["relations"] = rels;
  r.json["relationsHold"] = rep.relationsHold;
  r.json["maxLen"] = maxLen;
  r.json["classesChecked"] = rep.classesChecked;
  r.json["injective"] = rep.injective;
  r.code = rep.passed() ? 0 : 1;
  return r;
}

Report cmdPresentUniversalGroup(const std::string &path) {
  auto s = loadCategory(path);
  auto p = universalGroupPresentation(s);
  std::size_t rank = abelianizationRank(p);
  Report r = fileReport("presentation", text::writeGroupPresentation(p) +
                                            "# abelianization rank: " + std::to_string(rank) +
                                            "\n");
  r.json = presentationJson(p);
  r.json["abelianizationRank"] = rank;
  return r;
}

std::vector<std::string> extraWords(const CLI::App &sub) {
  auto words = sub.remaining();
  std::vector<std::string> unknown;
  for (const auto &w : words)
    if (w.rfind("--", 0) == 0)
      unknown.push_back(w);
  if (!unknown.empty())
    throw CLI::ExtrasError(unknown);
  if (words.empty())
    throw CLI::RequiredError("words");
  return words;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"catmon: universal monoids of finite categories and related constructions"};
  app.name("catmon");
  app.require_subcommand(1);
  app.fallthrough();
  std::string formatName = "text";
  app.add_option("--format", formatName, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::function<Report()> action;
  std::string fileA, fileB, wordA, wordB, side = "left", nameU, nameV;
  std::vector<std::string> words;
  bool trace = false;
  std::size_t embedMax = 3;
  std::size_t crmMax = kDefaultMultipleSearch;
  std::size_t m6Max = 5;

  auto sideOption = [&](CLI::App *c) {
    c->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  };

  auto *validate = app.add_subcommand("validate", "Validate an input file");
  validate->add_option("file", fileA)->required();
  validate->callback([&] { action = [&] { return cmdValidate(fileA); }; });

  auto *nf = app.add_subcommand("nf", "Normal form of an arrow sequence");
  nf->add_option("category", fileA)->required();
  nf->add_option("word", wordA)->required();
  nf->add_flag("--trace", trace, "Show each rewriting step");
  nf->callback([&] { action = [&] { return cmdNf(fileA, wordA, trace); }; });

  auto *mult = app.add_subcommand("mult", "Product of two elements");
  mult->add_option("category", fileA)->required();
  mult->add_option("x", wordA)->required();
  mult->add_option("y", wordB)->required();
  mult->callback([&] { action = [&] { return cmdMult(fileA, wordA, wordB); }; });

  auto *gcd = app.add_subcommand("gcd", "Gcd of a family of elements");
  gcd->add_option("category", fileA)->required();
  // Words arrive as extras so CLI11 does not split bracketed names like "[0,1]";
  // extras must stay local, so --format is registered here instead of falling through.
  gcd->allow_extras()->fallthrough(false);
  gcd->footer("Words: one or more arrow sequences after the category file.");
  gcd->add_option("--format", formatName, "Output format")->check(CLI::IsMember({"text", "json"}));
  sideOption(gcd);
  gcd->callback([&] {
    words = extraWords(*gcd);
    action = [&] { return cmdGcd(fileA, words, side); };
  });

  auto *lcm = app.add_subcommand("lcm", "Lcm of two generators");
  lcm->add_option("category", fileA)->required();
  lcm->add_option("x", wordA)->required();
  lcm->add_option("y", wordB)->required();
  sideOption(lcm);
  lcm->callback([&] { action = [&] { return cmdLcm(fileA, wordA, wordB, side); }; });

  auto *greedy = app.add_subcommand("greedy", "Check the greedy normal form");
  greedy->add_option("category", fileA)->required();
  greedy->add_option("word", wordA)->required();
  greedy->callback([&] { action = [&] { return cmdGreedy(fileA, wordA); }; });

  auto *check = app.add_subcommand("check", "Gcd checks");
  check->require_subcommand(1);
  auto *checkCategory = check->add_subcommand("category", "Is S a gcd-category");
  checkCategory->add_option("file", fileA)->required();
  checkCategory->callback([&] { action = [&] { return cmdCheckCategory(fileA); }; });
  auto *checkMonoid = check->add_subcommand("gcd-monoid", "Is the universal monoid a gcd-monoid");
  checkMonoid->add_option("file", fileA)->required();
  checkMonoid->callback([&] { action = [&] { return cmdCheckGcdMonoid(fileA); }; });

  auto *bary = app.add_subcommand("barycentric", "Face poset of a complex");
  bary->add_option("complex", fileA)->required();
  bary->callback([&] { action = [&] { return cmdBarycentric(fileA); }; });

  auto *chains = app.add_subcommand("chain-complex", "Complex of chains of a poset");
  chains->add_option("poset", fileA)->required();
  chains->callback([&] { action = [&] { return cmdChainComplex(fileA); }; });

  auto *homotopy = app.add_subcommand("homotopy", "Floating homotopy group decomposition");
  homotopy->add_option("file", fileA, "complex, or poset for its chain complex")->required();
  homotopy->callback([&] { action = [&] { return cmdHomotopy(fileA); }; });

  auto *cross = app.add_subcommand("cross-check", "Compare the two free-rank routes");
  cross->add_option("poset", fileA)->required();
  cross->callback([&] { action = [&] { return cmdCrossCheck(fileA); }; });

  auto *spindle = app.add_subcommand("spindle", "Spindles of a poset");
  spindle->require_subcommand(1);
  auto spindleArgs = [&](CLI::App *c) {
    c->add_option("poset", fileA)->required();
    c->add_option("u", nameU)->required();
    c->add_option("v", nameV)->required();
  };
  auto *spDetect = spindle->add_subcommand("detect", "Is [u,v] a spindle");
  spindleArgs(spDetect);
  spDetect->callback([&] { action = [&] { return cmdSpindleDetect(fileA, nameU, nameV); }; });
  auto *spCategory = spindle->add_subcommand("category", "Spindle category");
  spindleArgs(spCategory);
  spCategory->callback(
      [&] { action = [&] { return cmdSpindleCategory(fileA, nameU, nameV); }; });
  auto *spPres = spindle->add_subcommand("presentation", "Presentation of its monoid");
  spindleArgs(spPres);
  spPres->callback(
      [&] { action = [&] { return cmdSpindlePresentation(fileA, nameU, nameV); }; });

  auto *embed = app.add_subcommand("embed-check", "Hom-set separation test");
  embed->add_option("category", fileA)->required();
  embed->add_option("functor", fileB, "functor file; the trivial functor if omitted");
  embed->add_option("--max-len", embedMax, "Sampling bound for sigma")->capture_default_str();
  embed->callback([&] { action = [&] { return cmdEmbedCheck(fileA, fileB, embedMax); }; });

  auto *monoid = app.add_subcommand("monoid", "Homogeneous monoid presentations");
  monoid->require_subcommand(1);
  auto *mClass = monoid->add_subcommand("class", "Congruence class of a word");
  mClass->add_option("presentation", fileA)->required();
  mClass->add_option("word", wordA)->required();
  mClass->callback([&] { action = [&] { return cmdMonoidClass(fileA, wordA); }; });
  auto *mEqual = monoid->add_subcommand("equal", "Word problem");
  mEqual->add_option("presentation", fileA)->required();
  mEqual->add_option("u", wordA)->required();
  mEqual->add_option("v", wordB)->required();
  mEqual->callback([&] { action = [&] { return cmdMonoidEqual(fileA, wordA, wordB); }; });
  auto *mAtoms = monoid->add_subcommand("atoms", "Atoms among the generators");
  mAtoms->add_option("presentation", fileA)->required();
  mAtoms->callback([&] { action = [&] { return cmdMonoidAtoms(fileA); }; });
  auto *mCrm = monoid->add_subcommand("crm", "Bounded common right multiple search");
  mCrm->add_option("presentation", fileA)->required();
  mCrm->allow_extras()->fallthrough(false);
  mCrm->footer("Words: one or more generator words after the presentation file.");
  mCrm->add_option("--format", formatName, "Output format")->check(CLI::IsMember({"text", "json"}));
  mCrm->add_option("--max-len", crmMax, "Longest word searched")->capture_default_str();
  mCrm->callback([&] {
    words = extraWords(*mCrm);
    action = [&] { return cmdMonoidCrm(fileA, words, crmMax); };
  });
  auto *mM6 = monoid->add_subcommand("m6", "Check the M6 substitution");
  mM6->add_option("--max-len", m6Max, "Longest class checked")->capture_default_str();
  mM6->callback([&] { action = [&] { return cmdMonoidM6(m6Max); }; });

  auto *present = app.add_subcommand("present", "Presentations");
  present->require_subcommand(1);
  auto *ug = present->add_subcommand("universal-group", "Presentation of the universal group");
  ug->add_option("category", fileA)->required();
  ug->callback([&] { action = [&] { return cmdPresentUniversalGroup(fileA); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Report r = action();
    if (formatName == "json")
      out << r.json.dump() << "\n";
    else
      out << r.text;
    return r.code;
  } catch (const Error &e) {
    err << "error: " << toString(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
}

} // namespace catmon::cli
