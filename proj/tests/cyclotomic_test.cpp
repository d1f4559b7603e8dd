#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "sl2inv/cyclotomic.hpp"
#include "sl2inv/errors.hpp"
#include "sl2inv/q_numbers.hpp"
#include "support.hpp"

using namespace sl2inv;
using namespace sl2inv::testing;

namespace {

LaurentPoly v(int e) { return LaurentPoly::v_power(e); }

const CyclotomicExpansion& expansion(const NamedKnot& k) {
    static std::map<std::string, CyclotomicExpansion> cache;
    auto it = cache.find(k.name);
    if (it == cache.end()) it = cache.emplace(k.name, a_coefficients(knot(k.braid), 6)).first;
    return it->second;
}

// Direct multiplication in Z[v^{±1}][X], then rewriting X^k in the [V_{j+1}]
// basis with X·[V_{j+1}] = [V_j] + [V_{j+2}].
ReprRingElt p_oracle(int n) {
    std::vector<LaurentPoly> poly{LaurentPoly(1L)};  // coefficients of X^0, X^1, ...
    for (int i = 0; i < n; ++i) {
        const LaurentPoly x = v(2 * i + 1) + v(-2 * i - 1);
        std::vector<LaurentPoly> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= x * poly[k];
        }
        poly = std::move(next);
    }
    ReprRingElt out;
    std::map<int, LaurentPoly> power{{0, LaurentPoly(1L)}};  // X^k in the V basis
    for (std::size_t k = 0; k < poly.size(); ++k) {
        for (const auto& [j, c] : power) out.add_term(j, c * poly[k]);
        std::map<int, LaurentPoly> next;
        for (const auto& [j, c] : power) {
            if (j > 0) next[j - 1] += c;
            next[j + 1] += c;
        }
        power = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("p basis") {
    for (auto variant : {PBasis::P, PBasis::PPrime, PBasis::PDoublePrime}) {
        const BasisElement b = p_basis(0, variant);
        CHECK(b.numerator == ReprRingElt::irrep_class(0));
        CHECK(b.divisor == LaurentPoly(1L));
    }
    CHECK(p_basis(1, PBasis::P).numerator ==
          ReprRingElt::irrep_class(1) - ReprRingElt::irrep_class(0, v(1) + v(-1)));
    for (int n = 0; n <= 6; ++n) CHECK(p_basis(n, PBasis::P).numerator == p_oracle(n));
    CHECK(p_basis(3, PBasis::PPrime).divisor == v_minus_vinv().pow(3) * quantum_factorial(3));
    CHECK(p_basis(2, PBasis::PDoublePrime).divisor == v_minus_vinv().pow(4) * quantum_factorial(5));
    // [V_2]·P_n = P_{n+1} + x_n P_n.
    for (int n = 0; n <= 5; ++n)
        CHECK(ReprRingElt::irrep_class(1) * p_basis(n, PBasis::P).numerator ==
              p_basis(n + 1, PBasis::P).numerator + (v(2 * n + 1) + v(-2 * n - 1)) * p_basis(n, PBasis::P).numerator);
    CHECK_THROWS_AS(p_basis(-1, PBasis::P), RangeError);
}

TEST_CASE("cyclotomic coefficients of the corpus") {
    for (const NamedKnot& k : kKnots) {
        INFO(k.name);
        const CyclotomicExpansion& a = expansion(k);
        REQUIRE(a.max_index() == 6);
        for (int n = 0; n <= 6; ++n) {
            CHECK(a.a[static_cast<std::size_t>(n)] == expected_a(k.name, n));
            CHECK(a.a[static_cast<std::size_t>(n)].is_in_q());
            CHECK(a.a[static_cast<std::size_t>(n)].is_integral());
        }
    }
    // The mirror pair differs by q ↦ q^{-1}.
    for (int n = 0; n <= 6; ++n)
        CHECK(expansion(kKnots[1]).a[static_cast<std::size_t>(n)].inverted() == expansion(kKnots[2]).a[static_cast<std::size_t>(n)]);
    // A kinked presentation of the figure-eight (extra stabilization) gives the same table.
    CHECK(a_coefficients(knot("strands:4 1 -2 1 -2 3"), 3).a == std::vector<LaurentPoly>(4, LaurentPoly(1L)));
}

TEST_CASE("round trip through the colored Jones polynomial") {
    for (const NamedKnot& k : kKnots)
        for (int n = 0; n <= 4; ++n) {
            INFO(k.name << " n=" << n);
            CHECK(reconstruct_jones(expansion(k), n) == string_knot_jones(knot(k.braid), n));
        }
    CHECK(reconstruct_jones(expansion(kKnots[3]), 1) == LaurentPoly(1L) + v_diff(1) * v_diff(3));
    CHECK_THROWS_AS(reconstruct_jones(expansion(kKnots[0]), 7), InsufficientCoefficients);
    // The 5_1 torus knot is not in the corpus; its table is still integral and round-trips.
    const Link five = knot("strands:2 1 1 1 1 1");
    const CyclotomicExpansion a = a_coefficients(five, 3);
    for (int n = 0; n <= 3; ++n) CHECK(reconstruct_jones(a, n) == string_knot_jones(five, n));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(a_coefficients(Link(parse_braid("strands:2 1 1")), 2), RangeError);
    CHECK_THROWS_AS(a_coefficients(knot("strands:1", 1), 2), BadFraming);
    CHECK_THROWS_AS(a_coefficients(knot("strands:1"), -1), RangeError);
}

TEST_CASE("tau against subset enumeration") {
    CHECK(tau_ik(4, 0) == LaurentPoly(1L));
    CHECK(tau_ik(2, 1) == v_diff(1).pow(2) + v_diff(2).pow(2));
    for (int i = 0; i <= 7; ++i)
        for (int k = 0; k <= i; ++k) {
            LaurentPoly expected;
            for (unsigned mask = 0; mask < (1U << i); ++mask) {
                if (std::popcount(mask) != k) continue;
                LaurentPoly term(1L);
                for (int p = 1; p <= i; ++p)
                    if (mask & (1U << (p - 1))) term *= v_diff(p) * v_diff(p);
                expected += term;
            }
            CHECK(tau_ik(i, k) == expected);
        }
    CHECK_THROWS_AS(tau_ik(2, 3), IndexError);
}

TEST_CASE("alpha-expansion coefficients") {
    const CyclotomicExpansion& unknot = expansion(kKnots[0]);
    const CyclotomicExpansion& fig8 = expansion(kKnots[3]);
    for (int i = 0; i <= 6; ++i) CHECK(mm_coefficient(unknot, 0, i) == LaurentPoly(1L));
    CHECK(mm_coefficient(fig8, 0, 2) ==
          LaurentPoly(1L) - v_diff(1).pow(2) + v_diff(1).pow(2) * v_diff(2).pow(2));
    // Consecutive partial sums of the constant term differ by a multiple of (q;q)_{I+1}.
    for (const NamedKnot& k : kKnots)
        for (int i = 0; i < 6; ++i) {
            const LaurentPoly diff = mm_coefficient(expansion(k), 0, i + 1) - mm_coefficient(expansion(k), 0, i);
            CHECK(divides_integrally(q_pochhammer(i + 1), diff));
        }
    // For higher alpha-powers the increments are divisible by (q;q)_{floor((I+1)/(k+1))}.
    const CyclotomicExpansion ones{"", std::vector<LaurentPoly>(10, LaurentPoly(1L))};
    for (int k = 1; k <= 3; ++k)
        for (int i = k; i < 9; ++i) {
            const LaurentPoly diff = mm_coefficient(ones, k, i + 1) - mm_coefficient(ones, k, i);
            CHECK(divides_integrally(q_pochhammer((i + 1) / (k + 1)), diff));
        }
    CHECK_THROWS_AS(mm_coefficient(fig8, 0, 7), InsufficientCoefficients);
    CHECK_THROWS_AS(mm_coefficient(fig8, -1, 3), IndexError);
}

TEST_CASE("Kashaev values") {
    for (int n = 1; n <= 6; ++n) CHECK(kashaev_value(expansion(kKnots[0]), n) == CycloNumber(n, 1));
    // Truncation independence at zeta_N.
    for (const NamedKnot& k : kKnots)
        for (int n = 1; n <= 3; ++n)
            CHECK(eval_at_root(mm_coefficient(expansion(k), 0, n + 3), n) == kashaev_value(expansion(k), n));
    CHECK(kashaev_value(expansion(kKnots[3]), 3) == CycloNumber(3, 13));
    CHECK(kashaev_value(expansion(kKnots[3]), 1) == CycloNumber(1, 1));
}

TEST_CASE("P' products") {
    // P'_0 is the unit.
    for (int j = 0; j <= 4; ++j) {
        std::vector<LaurentPoly> unit(6);
        unit[static_cast<std::size_t>(j)] = LaurentPoly(1L);
        CHECK(pprime_product(0, j, 5) == unit);
    }
    // Commutativity, and integrality of the structure constants.
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            const auto c = pprime_product(i, j, 6);
            CHECK(c == pprime_product(j, i, 6));
            for (const auto& x : c) CHECK(x.is_integral());
        }
}
