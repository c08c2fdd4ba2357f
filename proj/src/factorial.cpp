#include "w15j/factorial.hpp"

#include <mutex>
#include <shared_mutex>

namespace w15j {

namespace {

std::shared_mutex prime_mutex;
std::vector<std::int64_t> primes = {2, 3, 5, 7, 11, 13};

void grow_primes_locked(std::size_t min_count) {
    std::int64_t cand = primes.back();
    while (primes.size() < min_count) {
        cand += 2;
        bool is_prime = true;
        for (std::int64_t p : primes) {
            if (p * p > cand) break;
            if (cand % p == 0) { is_prime = false; break; }
        }
        if (is_prime) primes.push_back(cand);
    }
}

std::shared_mutex fact_mutex;
std::vector<FactorialFactors> fact_memo;  // fact_memo[n] = n!

std::vector<std::int64_t> legendre_exponents(int n) {
    std::vector<std::int64_t> out;
    std::size_t idx = 0;
    for (;;) {
        std::int64_t p;
        {
            std::shared_lock lk(prime_mutex);
            if (idx >= primes.size()) {
                lk.unlock();
                std::unique_lock wl(prime_mutex);
                grow_primes_locked(idx + 64);
                p = primes[idx];
            } else {
                p = primes[idx];
            }
        }
        if (p > n) break;
        std::int64_t e = 0;
        for (std::int64_t q = n / p; q > 0; q /= p) e += q;
        out.push_back(e);
        ++idx;
    }
    return out;
}

} // namespace

const std::vector<std::int64_t>& prime_table(std::size_t min_count) {
    {
        std::shared_lock lk(prime_mutex);
        if (primes.size() >= min_count) return primes;
    }
    std::unique_lock lk(prime_mutex);
    grow_primes_locked(min_count);
    return primes;
}

const FactorialFactors& factorial_factors(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    {
        std::shared_lock lk(fact_mutex);
        if (static_cast<std::size_t>(n) < fact_memo.size()) return fact_memo[n];
    }
    std::unique_lock lk(fact_mutex);
    while (fact_memo.size() <= static_cast<std::size_t>(n))
        fact_memo.emplace_back(legendre_exponents(static_cast<int>(fact_memo.size())));
    return fact_memo[n];
}

mpz_class FactorialFactors::to_integer() const {
    const auto& pt = prime_table(exps_.size());
    mpz_class out = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pt[i]),
                      static_cast<unsigned long>(exps_[i]));
        out *= pw;
    }
    return out;
}

void FactorialProduct::mul_factorial(int n, std::int64_t power) {
    const auto& f = factorial_factors(n).exponents();
    if (f.size() > exps_.size()) exps_.resize(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) exps_[i] += power * f[i];
}

void FactorialProduct::sqrt_split(mpq_class& rational, mpz_class& radicand) const {
    const auto& pt = prime_table(exps_.size());
    mpz_class num = 1, den = 1, rad = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::int64_t e = exps_[i];
        if (e == 0) continue;
        mpz_class pw;
        if (e > 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pt[i]),
                          static_cast<unsigned long>(e / 2));
            num *= pw;
            if (e % 2) rad *= pt[i];
        } else {
            // 1/sqrt(p^{|e|}): pull whole powers into the denominator, odd leftover
            // becomes sqrt(p)/p.
            std::int64_t a = -e;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pt[i]),
                          static_cast<unsigned long>((a + 1) / 2));
            den *= pw;
            if (a % 2) rad *= pt[i];
        }
    }
    rational = mpq_class(num, den);
    rational.canonicalize();
    radicand = rad;
}

mpq_class FactorialProduct::to_rational() const {
    const auto& pt = prime_table(exps_.size());
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::int64_t e = exps_[i];
        if (e == 0) continue;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pt[i]),
                      static_cast<unsigned long>(e > 0 ? e : -e));
        (e > 0 ? num : den) *= pw;
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace w15j
