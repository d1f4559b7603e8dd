#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sl2inv/laurent_poly.hpp"

namespace sl2inv {

// Integer coefficients c_0 + c_1 x + ... of the N-th cyclotomic polynomial,
// obtained from x^N - 1 = prod_{d | N} Phi_d.  Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(int order);

// Element of Z[zeta_N] = Z[x]/(Phi_N), stored as the unique residue of
// degree < deg Phi_N.  zeta_N is the class of x.
class CycloNumber {
public:
    CycloNumber() = default;  // order 1, value 0
    explicit CycloNumber(int order);
    CycloNumber(int order, const Integer& value);
    // Reduces an arbitrary integer polynomial in x modulo Phi_N.
    static CycloNumber from_poly(int order, std::vector<Integer> coeffs);
    // zeta_N^k for any integer k.
    static CycloNumber zeta_power(int order, int k);

    int order() const noexcept { return order_; }
    const std::vector<Integer>& residue() const noexcept { return residue_; }
    bool is_zero() const;

    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend bool operator==(const CycloNumber& a, const CycloNumber& b) = default;

    // Image under the Galois automorphism zeta ↦ zeta^a (gcd(a, N) = 1).
    CycloNumber galois(int a) const;
    // Value in C with zeta_N = exp(2 pi i / N).
    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    void check_order(const CycloNumber& other) const;

    int order_ = 1;
    std::vector<Integer> residue_ = std::vector<Integer>(1);
};

// q ↦ zeta_N.  Requires p ∈ Z[q^{±1}].
CycloNumber eval_at_root(const LaurentPoly& p, int order);

}  // namespace sl2inv
