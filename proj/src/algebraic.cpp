#include "w15j/algebraic.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace w15j {

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& q) {
    AlgebraicNumber out;
    mpq_class qq = q;
    qq.canonicalize();
    out.add_term(1, qq);
    return out;
}

AlgebraicNumber AlgebraicNumber::term(const mpq_class& q, const mpz_class& rad) {
    AlgebraicNumber out;
    if (q != 0) {
        if (rad <= 0) throw std::invalid_argument("radicand must be positive");
        mpq_class qq = q;
        qq.canonicalize();
        out.add_term(rad, qq);
    }
    return out;
}

void AlgebraicNumber::add_term(const mpz_class& rad, const mpq_class& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(rad);
    if (it == terms_.end()) {
        terms_.emplace(rad, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, c);
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, -c);
    return *this;
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber out;
    mpz_class g, ra, rb;
    for (const auto& [r1, c1] : a.terms_) {
        for (const auto& [r2, c2] : b.terms_) {
            // sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2); the quotient is square-free
            // because r1, r2 are and their cofactors are coprime.
            mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), r2.get_mpz_t());
            ra = r1 / g;
            rb = r2 / g;
            out.add_term(ra * rb, c1 * c2 * g);
        }
    }
    return out;
}

AlgebraicNumber& AlgebraicNumber::scale(const mpq_class& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    mpq_class qq = q;
    qq.canonicalize();
    for (auto& [r, c] : terms_) c *= qq;
    return *this;
}

double AlgebraicNumber::to_double() const {
    if (terms_.empty()) return 0.0;
    for (mpfr_prec_t prec = 256; prec <= 4096; prec *= 2) {
        mpfr_t acc, t, sq, maxabs;
        mpfr_inits2(prec, acc, t, sq, maxabs, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(acc, 1);
        mpfr_set_zero(maxabs, 1);
        for (const auto& [r, c] : terms_) {
            mpfr_set_z(sq, r.get_mpz_t(), MPFR_RNDN);
            mpfr_sqrt(sq, sq, MPFR_RNDN);
            mpfr_set_q(t, c.get_mpq_t(), MPFR_RNDN);
            mpfr_mul(t, t, sq, MPFR_RNDN);
            mpfr_add(acc, acc, t, MPFR_RNDN);
            mpfr_abs(t, t, MPFR_RNDN);
            mpfr_max(maxabs, maxabs, t, MPFR_RNDN);
        }
        // Detect catastrophic cancellation: escalate until the sum retains at
        // least ~64 bits over the largest term's rounding noise.
        bool ok = true;
        if (!mpfr_zero_p(acc)) {
            long ea = mpfr_get_exp(acc);
            long em = mpfr_get_exp(maxabs);
            ok = (em - ea) < static_cast<long>(prec) - 64;
        } else {
            ok = false;
        }
        double out = mpfr_get_d(acc, MPFR_RNDN);
        mpfr_clears(acc, t, sq, maxabs, static_cast<mpfr_ptr>(nullptr));
        if (ok || prec == 4096) return out;
    }
    return 0.0;  // unreachable
}

std::string AlgebraicNumber::serialize() const {
    if (terms_.empty()) return "0/1 sqrt 1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_num().get_str() << '/' << c.get_den().get_str()
           << " sqrt " << r.get_str();
    }
    return os.str();
}

namespace {

// Sound for radicands whose prime factors are below 1e5 (every radicand this
// library generates: factorial primes stay below ~4*jmax). Larger unfactored
// leftovers are still screened for perfect squares.
bool is_squarefree(const mpz_class& n) {
    if (n <= 0) return false;
    if (n == 1) return true;
    mpz_class m = n;
    for (long p = 2; p <= 100000 && m > 1; p == 2 ? p = 3 : p += 2) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) return false;
    return true;
}

} // namespace

AlgebraicNumber AlgebraicNumber::parse(const std::string& text) {
    AlgebraicNumber out;
    std::istringstream is(text);
    std::string numden, kw, rad, plus;
    for (;;) {
        if (!(is >> numden >> kw >> rad)) throw std::invalid_argument("malformed algebraic value: " + text);
        if (kw != "sqrt") throw std::invalid_argument("expected 'sqrt' in: " + text);
        auto slash = numden.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("expected num/den in: " + text);
        mpq_class c;
        try {
            c = mpq_class(mpz_class(numden.substr(0, slash)), mpz_class(numden.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational in: " + text);
        }
        c.canonicalize();
        mpz_class r;
        try {
            r = mpz_class(rad);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad radicand in: " + text);
        }
        if (c != 0) {
            if (!is_squarefree(r))
                throw std::invalid_argument("radicand not square-free: " + rad);
            out.add_term(r, c);
        }
        if (!(is >> plus)) break;
        if (plus != "+") throw std::invalid_argument("expected '+' in: " + text);
    }
    return out;
}

} // namespace w15j
