#include "sl2inv/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "sl2inv/errors.hpp"
#include "sl2inv/q_numbers.hpp"

namespace sl2inv {

namespace {

// x_i = v^{2i+1} + v^{-2i-1}, the root of the i-th factor of P_n.
LaurentPoly product_root(int i) { return LaurentPoly::v_power(2 * i + 1) + LaurentPoly::v_power(-2 * i - 1); }

const ReprRingElt& p_numerator(int n) {
    static std::mutex mutex;
    static std::map<int, ReprRingElt> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    ReprRingElt p = ReprRingElt::irrep_class(0);
    int built = 0;
    // Extend from the largest cached prefix.
    for (int k = n; k > 0; --k) {
        if (auto it = cache.find(k); it != cache.end()) {
            p = it->second;
            built = k;
            break;
        }
    }
    for (int i = built; i < n; ++i) {
        p = p * (ReprRingElt::irrep_class(1) - ReprRingElt::irrep_class(0, product_root(i)));
        cache.emplace(i + 1, p);
    }
    return cache.emplace(n, p).first->second;
}

LaurentPoly pprime_divisor(int n) { return v_minus_vinv().pow(static_cast<unsigned>(n)) * quantum_factorial(n); }

LaurentPoly checked_div(const LaurentPoly& a, const LaurentPoly& b, const std::string& context) {
    try {
        return exact_div(a, b);
    } catch (const NonExactDivision& e) {
        throw IntegralityViolation(context + ": " + e.what());
    }
}

}  // namespace

BasisElement p_basis(int n, PBasis variant) {
    if (n < 0) throw RangeError("basis index must be nonnegative");
    BasisElement b{p_numerator(n), LaurentPoly(1L)};
    switch (variant) {
        case PBasis::P:
            break;
        case PBasis::PPrime:
            b.divisor = pprime_divisor(n);
            break;
        case PBasis::PDoublePrime:
            b.divisor = v_minus_vinv().pow(static_cast<unsigned>(2 * n)) * quantum_factorial(2 * n + 1);
            break;
    }
    return b;
}

LaurentPoly evaluate_basis(JonesEvaluator& eval, std::span<const BasisElement> colors) {
    std::vector<ColorVector> numerators;
    LaurentPoly divisor(1L);
    for (const auto& c : colors) {
        numerators.push_back(c.numerator);
        divisor *= c.divisor;
    }
    return checked_div(eval.evaluate_multilinear(numerators), divisor, "normalized basis evaluation");
}

CyclotomicExpansion a_coefficients(const Link& knot, int max_index) {
    if (knot.num_components() != 1) throw RangeError("cyclotomic expansion needs a knot");
    if (knot.target_framings().front() != 0) throw BadFraming("cyclotomic expansion needs framing 0");
    if (max_index < 0) throw RangeError("max index must be nonnegative");
    JonesEvaluator eval(knot);
    CyclotomicExpansion out{format_braid(knot.braid()), {}};
    for (int n = 0; n <= max_index; ++n) {
        const BasisElement b = p_basis(n, PBasis::PDoublePrime);
        LaurentPoly a = evaluate_basis(eval, std::span(&b, 1));
        if (!a.is_in_q() || !a.is_integral())
            throw IntegralityViolation("a_" + std::to_string(n) + " = " + a.to_string() + " is not in Z[q, q^-1]");
        out.a.push_back(std::move(a));
    }
    return out;
}

LaurentPoly reconstruct_jones(const CyclotomicExpansion& a, int n) {
    if (n < 0) throw RangeError("color must be nonnegative");
    if (a.max_index() < n) throw InsufficientCoefficients("need a_0..a_" + std::to_string(n));
    LaurentPoly total;
    for (int i = 0; i <= n; ++i) {
        LaurentPoly term = a.a[static_cast<std::size_t>(i)];
        for (int j = n + 1 - i; j <= n + 1 + i; ++j)
            if (j != n + 1) term *= v_diff(j);
        total += term;
    }
    return total;
}

LaurentPoly string_knot_jones(const Link& knot, int n) {
    const std::vector<int> colors{n};
    return exact_div(colored_jones(knot, colors), quantum_int(n + 1));
}

LaurentPoly tau_ik(int i, int k) {
    if (i < 0 || k < 0 || k > i) throw IndexError("tau_{" + std::to_string(i) + "," + std::to_string(k) + "}");
    // Elementary symmetric polynomials e_0..e_k of the squares, built one variable at a time.
    std::vector<LaurentPoly> e(static_cast<std::size_t>(k) + 1);
    e[0] = LaurentPoly(1L);
    for (int p = 1; p <= i; ++p) {
        const LaurentPoly x = v_diff(p).pow(2);
        for (int r = std::min(p, k); r >= 1; --r) e[static_cast<std::size_t>(r)] += x * e[static_cast<std::size_t>(r - 1)];
    }
    return e[static_cast<std::size_t>(k)];
}

LaurentPoly mm_coefficient(const CyclotomicExpansion& a, int k, int max_i) {
    if (k < 0) throw IndexError("alpha power must be nonnegative");
    if (a.max_index() < max_i) throw InsufficientCoefficients("need a_0..a_" + std::to_string(max_i));
    LaurentPoly total;
    for (int i = k; i <= max_i; ++i) {
        LaurentPoly term = tau_ik(i, i - k) * a.a[static_cast<std::size_t>(i)];
        if ((i - k) % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

CycloNumber kashaev_value(const CyclotomicExpansion& a, int order) {
    if (order < 1) throw RangeError("root order must be positive");
    // Terms i ≥ N carry the factor (q^N - 1) and vanish at zeta_N.
    return eval_at_root(mm_coefficient(a, 0, order), order);
}

std::vector<LaurentPoly> pprime_product(int i, int j, int max_index) {
    if (i < 0 || j < 0 || max_index < 0) throw RangeError("basis index must be nonnegative");
    // In the P-basis: X·P_k = P_{k+1} + x_k P_k, so (X - x_t) P_k = P_{k+1} + (x_k - x_t) P_k.
    std::vector<LaurentPoly> c(static_cast<std::size_t>(i + j) + 1);
    c[static_cast<std::size_t>(i)] = LaurentPoly(1L);
    for (int t = 0; t < j; ++t) {
        std::vector<LaurentPoly> next(c.size());
        const LaurentPoly xt = product_root(t);
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            next[k + 1] += c[k];
            next[k] += (product_root(static_cast<int>(k)) - xt) * c[k];
        }
        c = std::move(next);
    }
    const LaurentPoly denom = pprime_divisor(i) * pprime_divisor(j);
    std::vector<LaurentPoly> out(static_cast<std::size_t>(max_index) + 1);
    for (int k = 0; k <= std::min(max_index, i + j); ++k) {
        const auto& ck = c[static_cast<std::size_t>(k)];
        if (!ck.is_zero())
            out[static_cast<std::size_t>(k)] = checked_div(ck * pprime_divisor(k), denom, "P' product");
    }
    return out;
}

}  // namespace sl2inv
