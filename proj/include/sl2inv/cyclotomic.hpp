#pragma once

#include <string>
#include <vector>

#include "sl2inv/cyclo_number.hpp"
#include "sl2inv/jones.hpp"
#include "sl2inv/laurent_poly.hpp"
#include "sl2inv/links.hpp"
#include "sl2inv/repr_ring.hpp"

namespace sl2inv {

enum class PBasis { P, PPrime, PDoublePrime };

// A normalized basis element numerator / divisor of the representation ring.
// P'_n and P''_n have non-unit denominators, so they are kept as the product
// P_n = prod_{i<n} ([V_2] - v^{2i+1} - v^{-2i-1}) together with the divisor
//   P:   1
//   P':  (v - v^{-1})^n [n]!
//   P'': (v - v^{-1})^{2n} [2n+1]!
struct BasisElement {
    ReprRingElt numerator;
    LaurentPoly divisor;
};

BasisElement p_basis(int n, PBasis variant);

// Evaluates J_L on normalized basis elements (one per component), dividing
// exactly by the product of divisors.  A remainder raises IntegralityViolation.
LaurentPoly evaluate_basis(JonesEvaluator& eval, std::span<const BasisElement> colors);

// a_0(K), ..., a_N(K) with J_K = sum_n a_n sigma_n.
struct CyclotomicExpansion {
    std::string knot_id;
    std::vector<LaurentPoly> a;

    int max_index() const noexcept { return static_cast<int>(a.size()) - 1; }
};

// a_n(K) = J_{cl(K)}(P''_n) for n = 0..N.  The link must be a knot with target
// framing 0.  Every a_n is checked to lie in Z[q^{±1}].
CyclotomicExpansion a_coefficients(const Link& knot, int max_index);

// J_K(V_{n+1}) = sum_{i=0}^n a_i prod_{n+1-i ≤ j ≤ n+1+i, j ≠ n+1} (v^j - v^{-j}).
LaurentPoly reconstruct_jones(const CyclotomicExpansion& a, int n);

// Scalar of the 0-framed string knot on V_{n+1}: J_{cl(K)}(V_{n+1}) / [n+1].
LaurentPoly string_knot_jones(const Link& knot, int n);

// sum over k-subsets {p_1 < ... < p_k} of {1..i} of prod (v^{p_r} - v^{-p_r})^2.
LaurentPoly tau_ik(int i, int k);

// Partial sum sum_{i=k}^{I} (-1)^{k-i} tau_{i,i-k} a_i: coefficient of alpha^{2k}
// truncated at I = max_i.  Raising I to I+1 changes the result by a multiple of
// (q;q)_{floor((I+1)/(k+1))}, so the partial sums converge in the completion;
// for k = 0 this is (q;q)_{I+1}.
LaurentPoly mm_coefficient(const CyclotomicExpansion& a, int k, int max_i);

// Constant term of the alpha^2-expansion at q = zeta_N.
CycloNumber kashaev_value(const CyclotomicExpansion& a, int order);

// Coefficients on P'_0..P'_N of the product P'_i · P'_j.
std::vector<LaurentPoly> pprime_product(int i, int j, int max_index);

}  // namespace sl2inv
