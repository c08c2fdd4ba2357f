#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace w15j {

// Exact value of the form sum_i q_i sqrt(p_i): rational coefficients keyed by
// square-free positive radicands. Canonical: no zero coefficients, so equal
// values have identical maps. This is the value domain of all 3nj symbols here.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    static AlgebraicNumber from_rational(const mpq_class& q);
    // q * sqrt(r); r must already be square-free and positive unless q == 0.
    static AlgebraicNumber term(const mpq_class& q, const mpz_class& squarefree_radicand);

    bool is_zero() const { return terms_.empty(); }
    const std::map<mpz_class, mpq_class>& terms() const { return terms_; }

    AlgebraicNumber& operator+=(const AlgebraicNumber& o);
    AlgebraicNumber& operator-=(const AlgebraicNumber& o);
    friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
    friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& scale(const mpq_class& q);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.terms_ == b.terms_;
    }

    // Correctly rounded to within 4 ulp (guard precision with escalation).
    double to_double() const;

    // Cache-file fragment: "num/den sqrt rad" terms joined by " + ".
    std::string serialize() const;
    // Parses the serialize() format; throws std::invalid_argument on malformed
    // input or non-square-free radicands.
    static AlgebraicNumber parse(const std::string& text);

private:
    void add_term(const mpz_class& rad, const mpq_class& coeff);
    std::map<mpz_class, mpq_class> terms_;
};

} // namespace w15j
