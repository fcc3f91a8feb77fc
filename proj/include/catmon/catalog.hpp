#pragma once

#include "catmon/category.hpp"
#include "catmon/complex.hpp"
#include "catmon/group_words.hpp"
#include "catmon/poset.hpp"
#include "catmon/presented_monoid.hpp"

#include <cstddef>

// Small named examples used by the tests, the data files and the CLI.
namespace catmon::catalog {

/// 0 < a, b < 1.
Poset diamond();
/// o < p, o < q.
Poset vee();
/// o < p, q < r, s: {r, s} has two maximal lower bounds above o.
Poset noMeet();
/// "0" < "1" < ... < "n-1".
Poset chain(std::size_t n);
/// Pairwise incomparable elements named "0".."n-1".
Poset antichain(std::size_t n);

/// Four vertices on a 4-cycle, no 2-simplices.
SimplicialComplex square();

/// Objects 0, 1, 2; S(0,1) = {a,b,c}, S(1,2) = {a',b',c'},
/// S(0,2) = {aa',bb',cc',abar,bbar,cbar} with ab' = ba' = cbar,
/// bc' = cb' = abar, ac' = ca' = bbar.
CategoryDescription c6Description();
FiniteCategory c6();
/// a, a' -> (1,0,0); b, b' -> (0,1,0); c, c' -> (0,0,1) in Z^3.
CategoryFunctor c6Functor(const FiniteCategory &c6);

/// e0 -a,b-> e1 -c-> e2 with a c = b c (named "ac").
CategoryDescription cancellationCounterexampleDescription();
FiniteCategory cancellationCounterexample();

/// Z/2 as a one-object category: g g = id.
FiniteCategory cyclicGroupOfOrderTwo();

/// <a,b,c,a',b',c' | ab' = ba', bc' = cb', ac' = ca'>
MonoidPresentation c6Presentation();
/// <a,b,c,d,e,f | ae = cb, da = bf>
MonoidPresentation m6Presentation();
/// <a,b | aba = bab>
MonoidPresentation b3Presentation();

} // namespace catmon::catalog
