#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace w15j {

// Prime factorization of n!, held as exponents aligned with the shared prime table.
class FactorialFactors {
public:
    FactorialFactors() = default;
    explicit FactorialFactors(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {}

    const std::vector<std::int64_t>& exponents() const { return exps_; }
    mpz_class to_integer() const;

private:
    std::vector<std::int64_t> exps_;
};

// Shared prime table; grows on demand, safe for concurrent readers.
const std::vector<std::int64_t>& prime_table(std::size_t min_count);

// Exact prime factorization of n! (Legendre), memoized and thread-safe.
const FactorialFactors& factorial_factors(int n);

// Accumulator for products/ratios of factorials; sqrt splits into an exact
// rational times a square-free radicand.
class FactorialProduct {
public:
    void mul_factorial(int n, std::int64_t power = 1);
    // rational = prod primes^(e_i/2 rounded toward -inf handling), radicand squarefree
    void sqrt_split(mpq_class& rational, mpz_class& radicand) const;
    mpq_class to_rational() const;

private:
    std::vector<std::int64_t> exps_;
};

} // namespace w15j
