#pragma once

#include <map>
#include <string>

#include "sl2inv/laurent_poly.hpp"

namespace sl2inv {

// Finite combination sum_k c_k [V_{k+1}] in the representation ring with
// LaurentPoly coefficients.  Zero coefficients are never stored.
class ReprRingElt {
public:
    ReprRingElt() = default;
    static ReprRingElt irrep_class(int k, LaurentPoly coeff = LaurentPoly(1L));

    const std::map<int, LaurentPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    LaurentPoly coeff(int k) const;
    int max_index() const;

    void add_term(int k, const LaurentPoly& c);
    ReprRingElt& operator+=(const ReprRingElt& rhs);
    ReprRingElt& operator-=(const ReprRingElt& rhs);
    friend ReprRingElt operator+(ReprRingElt a, const ReprRingElt& b) { return a += b; }
    friend ReprRingElt operator-(ReprRingElt a, const ReprRingElt& b) { return a -= b; }
    friend ReprRingElt operator*(const LaurentPoly& s, const ReprRingElt& a);
    // Ring product through the Clebsch–Gordan rule.
    friend ReprRingElt operator*(const ReprRingElt& a, const ReprRingElt& b);
    friend bool operator==(const ReprRingElt& a, const ReprRingElt& b) = default;

    std::string to_string() const;

private:
    std::map<int, LaurentPoly> terms_;
};

// [V_{m+1}] · [V_{n+1}] = sum_{i = |m-n|, step 2}^{m+n} [V_{i+1}].
ReprRingElt multiply_classes(int m, int n);

}  // namespace sl2inv
