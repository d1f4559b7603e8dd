#pragma once

#include <vector>

#include "sl2inv/cyclotomic.hpp"
#include "sl2inv/laurent_poly.hpp"
#include "sl2inv/links.hpp"

namespace sl2inv {

// Class in Z[q]/((q;q)_N).  The representative is the unique polynomial of
// q-degree < N(N+1)/2 in the class; (q;q)_N is monic, so the remainder is
// computed over Z.  unit_shift records the power of q that was cleared from
// the input before dividing; it is already compensated in the representative.
class HabiroElement {
public:
    HabiroElement() = default;

    int level() const noexcept { return level_; }
    const LaurentPoly& representative() const noexcept { return rep_; }
    int unit_shift() const noexcept { return unit_shift_; }

    HabiroElement at_level(int level) const;

    friend HabiroElement operator+(const HabiroElement& a, const HabiroElement& b);
    friend HabiroElement operator-(const HabiroElement& a, const HabiroElement& b);
    friend HabiroElement operator*(const HabiroElement& a, const HabiroElement& b);
    friend bool operator==(const HabiroElement& a, const HabiroElement& b) {
        return a.level_ == b.level_ && a.rep_ == b.rep_;
    }

private:
    friend HabiroElement habiro_reduce(const LaurentPoly& p, int level);
    friend HabiroElement habiro_from_parts(int level, const LaurentPoly& rep, int unit_shift);

    int level_ = 1;
    LaurentPoly rep_;
    int unit_shift_ = 0;
};

// Canonical class of p ∈ Z[q^{±1}] modulo (q;q)_N.
HabiroElement habiro_reduce(const LaurentPoly& p, int level);

// Rebuilds an element from serialized parts, re-canonicalizing the representative.
HabiroElement habiro_from_parts(int level, const LaurentPoly& rep, int unit_shift);

// Compares at level min(N_x, N_y).
bool congruent(const HabiroElement& x, const HabiroElement& y);

// Truncation of omega (sign +1) or omega^{-1} (sign -1) in the P' basis:
//   omega      = sum_i v^{i(i+3)/2} P'_i
//   omega^{-1} = sum_i (-1)^i v^{-i(i+3)/2} P'_i
struct OmegaTruncation {
    int sign = 1;
    std::vector<LaurentPoly> terms;  // coefficient of P'_i, i = 0..N
};

OmegaTruncation omega(int sign, int max_index);

// Product of two truncated P'-series modulo the ideal spanned by P'_{N+1}, P'_{N+2}, ...
std::vector<LaurentPoly> pprime_series_product(const std::vector<LaurentPoly>& a,
                                               const std::vector<LaurentPoly>& b);

// I(L) = J_{L_0}(omega^{-f_1}, ..., omega^{-f_l}) truncated at index N and
// reduced at level N.  The link must be algebraically split with framings ±1.
HabiroElement surgery_invariant(const Link& link, int level);

// Single-knot surgery from the cyclotomic coefficients:
// sum_n omega^{-f}_n (v - v^{-1})^n [2n+1]!/[n]! a_n, reduced at level N.
HabiroElement knot_surgery_invariant(const CyclotomicExpansion& a, int framing, int level);

// (v - v^{-1})^n [2n+1]! / [n]!, the factor turning J(P''_n) into J(P'_n).
LaurentPoly pprime_bridge(int n);

}  // namespace sl2inv
