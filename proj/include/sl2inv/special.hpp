#pragma once

#include <string>
#include <vector>

#include "sl2inv/cyclo_number.hpp"
#include "sl2inv/habiro.hpp"
#include "sl2inv/q_series.hpp"

namespace sl2inv {

// tau_zeta(M) = I(M)|_{q = zeta_N}.  Exact once (q;q)_level vanishes at
// zeta_N, i.e. level ≥ N; otherwise LevelTooLow.
CycloNumber wrt(const HabiroElement& x, int root_order);

// iota_1(I(M)): the (q-1)-adic expansion to order D.  (q-1)^level divides
// (q;q)_level, so D ≤ level is required (OrderTooHigh).
QSeries ohtsuki_series(const HabiroElement& x, std::size_t order);

// Truncated expansion sum_k c_k (q - zeta)^k with c_k ∈ Z[zeta].
struct ZetaSeries {
    int root_order = 1;
    std::vector<CycloNumber> coeffs;

    friend bool operator==(const ZetaSeries&, const ZetaSeries&) = default;
    std::string to_string() const;
};

// Multiplicity of zeta_N as a root of (q;q)_level, i.e. floor(level / N).
int root_multiplicity(int level, int root_order);

// Taylor expansion of I(M) at q = zeta_N.  Coefficient k is well defined on
// the class when k < root_multiplicity(level, N).
ZetaSeries iota_zeta(const HabiroElement& x, int root_order, std::size_t order);

}  // namespace sl2inv
