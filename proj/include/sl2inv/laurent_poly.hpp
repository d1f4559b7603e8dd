#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sl2inv {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact Laurent polynomial in w = v^{1/2}, so q = v^2 = w^4.
//
// Terms are kept sorted by w-exponent with no zero coefficients; that
// representation is canonical, so equality is structural.  Membership in
// Z[v^{±1}] or Z[q^{±1}] is a predicate rather than a separate type.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Rational& constant);

    static LaurentPoly monomial(int w_exp, const Rational& coeff = 1);
    static LaurentPoly w_power(int e) { return monomial(e); }
    static LaurentPoly v_power(int e) { return monomial(2 * e); }
    static LaurentPoly q_power(int e) { return monomial(4 * e); }
    // Merges duplicate exponents and drops zeros; input order is irrelevant.
    static LaurentPoly from_terms(std::vector<Term> terms);
    // Coefficients of q^0, q^1, ... (a polynomial in q).
    static LaurentPoly from_q_coeffs(const std::vector<Integer>& coeffs, int q_shift = 0);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    int min_exp() const;
    int max_exp() const;
    Rational coeff(int w_exp) const;

    bool is_integral() const;
    bool is_in_q() const;  // every w-exponent ≡ 0 (mod 4)
    bool is_in_v() const;  // every w-exponent even
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(unsigned k) const;
    // Multiplication by w^shift.
    LaurentPoly shifted(int w_shift) const;
    // w ↦ w^{-1}; on Z[q^{±1}] this is the mirror involution q ↦ q^{-1}.
    LaurentPoly inverted() const;

    // Human-readable form in the coarsest variable that fits (q, then v, then w).
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// Returns c with a = b·c.  The quotient must be a Laurent polynomial over Q;
// any remainder raises NonExactDivision.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// True iff b divides a in the Laurent ring and the quotient is integral.
bool divides_integrally(const LaurentPoly& b, const LaurentPoly& a);

}  // namespace sl2inv
