#pragma once

#include "catmon/category.hpp"
#include "catmon/complex.hpp"
#include "catmon/group_presentation.hpp"
#include "catmon/group_words.hpp"
#include "catmon/interval.hpp"
#include "catmon/poset.hpp"
#include "catmon/presented_monoid.hpp"

#include <string>
#include <string_view>

// Line-oriented text formats. '#' starts a comment when it begins a token;
// the first meaningful line is the header naming the format.
namespace catmon::text {

/// Header word of a file ("poset", "category", ...); throws Parse if none.
std::string header(std::string_view text);

Poset parsePoset(std::string_view text);
std::string writePoset(const Poset &p);

SimplicialComplex parseComplex(std::string_view text);
std::string writeComplex(const SimplicialComplex &k);

/// Besides obj/arrow/comp lines, "ident <obj> <name>" renames an identity.
CategoryDescription parseCategory(std::string_view text);
std::string writeCategory(const FiniteCategory &s);

IsotoneMap parseMap(std::string_view text, const Poset &from, const Poset &to);

CategoryFunctor parseFunctor(std::string_view text, const FiniteCategory &s);
std::string writeFunctor(const FiniteCategory &s, const CategoryFunctor &f);

GroupPresentation parseGroupPresentation(std::string_view text);
std::string writeGroupPresentation(const GroupPresentation &p);

MonoidPresentation parseMonoidPresentation(std::string_view text);
std::string writeMonoidPresentation(const MonoidPresentation &p);

} // namespace catmon::text
