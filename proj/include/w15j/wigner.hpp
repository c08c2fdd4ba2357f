#pragma once

#include "w15j/algebraic.hpp"
#include "w15j/half_int.hpp"

namespace w15j {

class SymbolCache;

// Exact 3j symbol (Racah / van der Waerden closed form, Condon-Shortley).
// Throws std::invalid_argument when |m| > j or j-m is not integral.
AlgebraicNumber wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                          HalfInt m1, HalfInt m2, HalfInt m3);

// <j1 m1 j2 m2 | j3 m3>, exact.
AlgebraicNumber clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                               HalfInt j3, HalfInt m3);

// Exact 6j via the Racah single sum; zero when any triad fails.
AlgebraicNumber wigner_6j_uncached(HalfInt a, HalfInt b, HalfInt c,
                                   HalfInt d, HalfInt e, HalfInt f);

// Cached variant; results are memoized under the canonical (Regge) key.
AlgebraicNumber wigner_6j(HalfInt a, HalfInt b, HalfInt c,
                          HalfInt d, HalfInt e, HalfInt f, SymbolCache& cache);

// Exact 9j: single sum over x of (-1)^{2x}(2x+1) times three 6j symbols.
AlgebraicNumber wigner_9j(HalfInt a, HalfInt b, HalfInt c,
                          HalfInt d, HalfInt e, HalfInt f,
                          HalfInt g, HalfInt h, HalfInt i, SymbolCache& cache);

} // namespace w15j
