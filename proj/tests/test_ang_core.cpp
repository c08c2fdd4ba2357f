#include "w15j/algebraic.hpp"
#include "w15j/factorial.hpp"
#include "w15j/half_int.hpp"

#include <mpfr.h>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace w15j;

namespace {
HalfInt H(int twice) { return HalfInt::from_twice(twice); }
AlgebraicNumber rat(long n, long d = 1) {
    return AlgebraicNumber::from_rational(mpq_class(n, d));
}
AlgebraicNumber root(long num, long den, long rad) {
    return AlgebraicNumber::term(mpq_class(num, den), rad);
}
} // namespace

TEST_CASE("triangle selection rule") {
    CHECK(triangle_ok(H(2), H(2), H(2)));          // (1,1,1)
    CHECK_FALSE(triangle_ok(H(1), H(1), H(1)));    // (1/2,1/2,1/2): odd perimeter
    CHECK_FALSE(triangle_ok(H(2), H(2), H(6)));    // (1,1,3): c > a+b
    CHECK(triangle_ok(H(1), H(1), H(0)));
    CHECK(triangle_ok(H(1), H(1), H(2)));

    // symmetric under all 6 permutations
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 8);
    for (int it = 0; it < 300; ++it) {
        int a = d(rng), b = d(rng), c = d(rng);
        const bool r = triangle_ok(H(a), H(b), H(c));
        CHECK(r == triangle_ok(H(a), H(c), H(b)));
        CHECK(r == triangle_ok(H(b), H(a), H(c)));
        CHECK(r == triangle_ok(H(b), H(c), H(a)));
        CHECK(r == triangle_ok(H(c), H(a), H(b)));
        CHECK(r == triangle_ok(H(c), H(b), H(a)));
    }
}

TEST_CASE("factorial factorizations") {
    CHECK(factorial_factors(0).exponents().empty());
    CHECK(factorial_factors(1).exponents().empty());
    CHECK(factorial_factors(5).to_integer() == 120);   // 2^3 3 5
    CHECK(factorial_factors(6).to_integer() == 720);   // 2^4 3^2 5
    CHECK(factorial_factors(20).to_integer() == mpz_class("2432902008176640000"));

    // n! * (n+1) = (n+1)!
    for (int n = 0; n < 40; ++n) {
        mpz_class lhs = factorial_factors(n).to_integer() * (n + 1);
        CHECK(lhs == factorial_factors(n + 1).to_integer());
    }
}

TEST_CASE("algebraic arithmetic canonical forms") {
    // sqrt2 + sqrt2 = 2 sqrt2
    CHECK(root(1, 1, 2) + root(1, 1, 2) == root(2, 1, 2));
    // sqrt2 * sqrt2 = 2
    CHECK(root(1, 1, 2) * root(1, 1, 2) == rat(2));
    // (1+sqrt3)(1-sqrt3) = -2
    AlgebraicNumber a = rat(1) + root(1, 1, 3);
    AlgebraicNumber b = rat(1) - root(1, 1, 3);
    CHECK(a * b == rat(-2));
    // sqrt6 * sqrt10 = 2 sqrt15
    CHECK(root(1, 1, 6) * root(1, 1, 10) == root(2, 1, 15));
    // cancellation to exact zero leaves the empty map
    CHECK((root(1, 3, 5) - root(1, 3, 5)).is_zero());
}

TEST_CASE("distributivity on random algebraic values") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-6, 6);
    const long rads[] = {1, 2, 3, 5, 6, 7, 10};
    std::uniform_int_distribution<int> ri(0, 6);
    auto rand_alg = [&]() {
        AlgebraicNumber v;
        for (int t = 0; t < 3; ++t) v += root(num(rng), 1 + std::abs(num(rng)), rads[ri(rng)]);
        return v;
    };
    for (int it = 0; it < 200; ++it) {
        AlgebraicNumber x = rand_alg(), y = rand_alg(), z = rand_alg();
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
    }
}

TEST_CASE("to_double basics") {
    CHECK(AlgebraicNumber().to_double() == 0.0);
    CHECK(root(1, 2, 2).to_double() == doctest::Approx(0.7071067811865476).epsilon(1e-16));
    CHECK(rat(-3, 4).to_double() == -0.75);
}

TEST_CASE("to_double stress value matches 768-bit reference within 4 ulp") {
    // ~2k-term alternating sum; reference recomputed independently at much
    // higher precision and in reverse term order
    AlgebraicNumber v;
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(1, 1000);
    const long rads[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int t = 0; t < 2000; ++t) {
        long n = num(rng) * ((t % 2) ? -1 : 1);
        v += root(n, num(rng), rads[t % 10]);
    }
    const double got = v.to_double();
    mpfr_t acc, term, sq;
    mpfr_inits2(768, acc, term, sq, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        mpfr_set_z(sq, it->first.get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(sq, sq, MPFR_RNDN);
        mpfr_set_q(term, it->second.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term, term, sq, MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    const double ref = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clears(acc, term, sq, static_cast<mpfr_ptr>(nullptr));
    const double ulp = std::abs(ref) * std::numeric_limits<double>::epsilon();
    CHECK(std::abs(ref - got) <= 4 * ulp);
}

TEST_CASE("serialize round trip and parse validation") {
    AlgebraicNumber v = root(-3, 7, 10) + root(22, 5, 1);
    CHECK(AlgebraicNumber::parse(v.serialize()) == v);
    CHECK(AlgebraicNumber::parse("0/1 sqrt 1").is_zero());
    CHECK_THROWS_AS(AlgebraicNumber::parse("1/2 sqrt 8"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraicNumber::parse("1/2 cbrt 2"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraicNumber::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("phase helper") {
    CHECK(sign_from_twice(0) == 1);
    CHECK(sign_from_twice(2) == -1);
    CHECK(sign_from_twice(-2) == -1);
    CHECK(sign_from_twice(4) == 1);
    CHECK_THROWS_AS(sign_from_twice(1), std::domain_error);
}
