#include "w15j/wigner.hpp"

#include "w15j/factorial.hpp"
#include "w15j/symbol_cache.hpp"

#include <algorithm>
#include <stdexcept>

namespace w15j {

namespace {

// Alternating factorial-ratio sum via term recurrence on a common denominator.
// terms: t_k = (-1)^k * prefac(k) / prod_i (k - lo_i)! / prod_j (hi_j - k)!
// Specialized separately for the 3j and 6j shapes below.

} // namespace

AlgebraicNumber wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                          HalfInt m1, HalfInt m2, HalfInt m3) {
    const int tj1 = j1.twice(), tj2 = j2.twice(), tj3 = j3.twice();
    const int tm1 = m1.twice(), tm2 = m2.twice(), tm3 = m3.twice();
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3)
        throw std::invalid_argument("wigner_3j: |m| > j");
    if ((tj1 + tm1) % 2 || (tj2 + tm2) % 2 || (tj3 + tm3) % 2)
        throw std::invalid_argument("wigner_3j: j - m not integral");
    if (tm1 + tm2 + tm3 != 0) return {};
    if (!triangle_ok(j1, j2, j3)) return {};

    const int jpm1 = (tj1 + tm1) / 2, jmm1 = (tj1 - tm1) / 2;
    const int jpm2 = (tj2 + tm2) / 2, jmm2 = (tj2 - tm2) / 2;
    const int jpm3 = (tj3 + tm3) / 2, jmm3 = (tj3 - tm3) / 2;
    const int t123 = (tj1 + tj2 - tj3) / 2;
    const int t132 = (tj1 - tj2 + tj3) / 2;
    const int t231 = (-tj1 + tj2 + tj3) / 2;
    const int tsum1 = (tj1 + tj2 + tj3) / 2 + 1;

    const int tmin = std::max({0, (tj2 - tj3 - tm1) / 2, (tj1 - tj3 + tm2) / 2});
    const int tmax = std::min({t123, jmm1, jpm2});
    if (tmin > tmax) return {};

    // sum over t of (-1)^t / [t! (t+(tj3-tj2+tm1)/2)! (t+(tj3-tj1-tm2)/2)!
    //                         (t123-t)! (jmm1-t)! (jpm2-t)!]
    const int a1 = (tj3 - tj2 + tm1) / 2;
    const int a2 = (tj3 - tj1 - tm2) / 2;
    mpq_class sum = 0;
    mpq_class term(tmin % 2 ? -1 : 1);
    {
        FactorialProduct fp;
        fp.mul_factorial(tmin, -1);
        fp.mul_factorial(tmin + a1, -1);
        fp.mul_factorial(tmin + a2, -1);
        fp.mul_factorial(t123 - tmin, -1);
        fp.mul_factorial(jmm1 - tmin, -1);
        fp.mul_factorial(jpm2 - tmin, -1);
        term *= fp.to_rational();
    }
    for (int t = tmin;; ++t) {
        sum += term;
        if (t == tmax) break;
        // t -> t+1 ratio
        mpq_class ratio(mpz_class(t123 - t) * (jmm1 - t) * (jpm2 - t),
                        mpz_class(t + 1) * (t + 1 + a1) * (t + 1 + a2));
        ratio.canonicalize();
        term *= -ratio;
    }
    if (sum == 0) return {};

    FactorialProduct root;
    root.mul_factorial(t123);
    root.mul_factorial(t132);
    root.mul_factorial(t231);
    root.mul_factorial(tsum1, -1);
    root.mul_factorial(jpm1);
    root.mul_factorial(jmm1);
    root.mul_factorial(jpm2);
    root.mul_factorial(jmm2);
    root.mul_factorial(jpm3);
    root.mul_factorial(jmm3);
    mpq_class rational;
    mpz_class radicand;
    root.sqrt_split(rational, radicand);

    const int sgn = sign_from_twice(static_cast<long>(tj1) - tj2 - tm3);
    return AlgebraicNumber::term(sum * rational * sgn, radicand);
}

AlgebraicNumber clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                               HalfInt j3, HalfInt m3) {
    if ((m1 + m2).twice() != m3.twice()) return {};
    AlgebraicNumber v = wigner_3j(j1, j2, j3, m1, m2, -m3);
    if (v.is_zero()) return v;
    const int sgn = sign_from_twice(static_cast<long>(j1.twice()) - j2.twice() + m3.twice());
    v *= AlgebraicNumber::term(sgn, j3.dim());
    return v;
}

AlgebraicNumber wigner_6j_uncached(HalfInt a, HalfInt b, HalfInt c,
                                   HalfInt d, HalfInt e, HalfInt f) {
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    const int td = d.twice(), te = e.twice(), tf = f.twice();
    if (!triangle_ok(a, b, c) || !triangle_ok(a, e, f) ||
        !triangle_ok(d, b, f) || !triangle_ok(d, e, c))
        return {};

    const int f1 = (ta + tb + tc) / 2;
    const int f2 = (ta + te + tf) / 2;
    const int f3 = (td + tb + tf) / 2;
    const int f4 = (td + te + tc) / 2;
    const int g1 = (ta + tb + td + te) / 2;
    const int g2 = (tb + tc + te + tf) / 2;
    const int g3 = (ta + tc + td + tf) / 2;
    const int kmin = std::max({f1, f2, f3, f4});
    const int kmax = std::min({g1, g2, g3});
    if (kmin > kmax) return {};

    // sum over k of (-1)^k (k+1)! / [(k-f1)!(k-f2)!(k-f3)!(k-f4)!
    //                               (g1-k)!(g2-k)!(g3-k)!]
    mpq_class sum = 0;
    mpq_class term(kmin % 2 ? -1 : 1);
    {
        FactorialProduct fp;
        fp.mul_factorial(kmin + 1);
        fp.mul_factorial(kmin - f1, -1);
        fp.mul_factorial(kmin - f2, -1);
        fp.mul_factorial(kmin - f3, -1);
        fp.mul_factorial(kmin - f4, -1);
        fp.mul_factorial(g1 - kmin, -1);
        fp.mul_factorial(g2 - kmin, -1);
        fp.mul_factorial(g3 - kmin, -1);
        term *= fp.to_rational();
    }
    for (int k = kmin;; ++k) {
        sum += term;
        if (k == kmax) break;
        mpq_class ratio(mpz_class(k + 2) * (g1 - k) * (g2 - k) * (g3 - k),
                        mpz_class(k + 1 - f1) * (k + 1 - f2) * (k + 1 - f3) * (k + 1 - f4));
        ratio.canonicalize();
        term *= -ratio;
    }
    if (sum == 0) return {};

    FactorialProduct root;
    auto tri = [&root](int tx, int ty, int tz) {
        root.mul_factorial((tx + ty - tz) / 2);
        root.mul_factorial((tx - ty + tz) / 2);
        root.mul_factorial((-tx + ty + tz) / 2);
        root.mul_factorial((tx + ty + tz) / 2 + 1, -1);
    };
    tri(ta, tb, tc);
    tri(ta, te, tf);
    tri(td, tb, tf);
    tri(td, te, tc);
    mpq_class rational;
    mpz_class radicand;
    root.sqrt_split(rational, radicand);
    return AlgebraicNumber::term(sum * rational, radicand);
}

AlgebraicNumber wigner_6j(HalfInt a, HalfInt b, HalfInt c,
                          HalfInt d, HalfInt e, HalfInt f, SymbolCache& cache) {
    const auto key = SymbolCache::canonical_key(a, b, c, d, e, f);
    if (auto hit = cache.lookup(key)) return *hit;
    AlgebraicNumber v = wigner_6j_uncached(a, b, c, d, e, f);
    cache.insert(key, v);
    return v;
}

AlgebraicNumber wigner_9j(HalfInt a, HalfInt b, HalfInt c,
                          HalfInt d, HalfInt e, HalfInt f,
                          HalfInt g, HalfInt h, HalfInt i, SymbolCache& cache) {
    for (auto [x, y, z] : {std::array{a, b, c}, {d, e, f}, {g, h, i},
                           {a, d, g}, {b, e, h}, {c, f, i}})
        if (!triangle_ok(x, y, z)) return {};
    const int lo = std::max({std::abs(a.twice() - i.twice()),
                             std::abs(b.twice() - f.twice()),
                             std::abs(d.twice() - h.twice())});
    const int hi = std::min({a.twice() + i.twice(), b.twice() + f.twice(),
                             d.twice() + h.twice()});
    AlgebraicNumber acc;
    for (int tx = lo; tx <= hi; tx += 2) {
        const HalfInt x = HalfInt::from_twice(tx);
        AlgebraicNumber p = wigner_6j(a, b, c, f, i, x, cache);
        if (p.is_zero()) continue;
        AlgebraicNumber q = wigner_6j(d, e, f, b, x, h, cache);
        if (q.is_zero()) continue;
        AlgebraicNumber r = wigner_6j(g, h, i, x, a, d, cache);
        if (r.is_zero()) continue;
        p *= q;
        p *= r;
        p.scale(mpq_class((tx % 2 ? -1 : 1) * (tx + 1)));
        acc += p;
    }
    return acc;
}

} // namespace w15j
