#include "sl2inv/habiro.hpp"

#include <algorithm>

#include "sl2inv/errors.hpp"
#include "sl2inv/parallel.hpp"
#include "sl2inv/q_numbers.hpp"

namespace sl2inv {

namespace {

using Coeffs = std::vector<Integer>;

// Coefficients of (q;q)_N in ascending powers of q.
Coeffs pochhammer_coeffs(int level) {
    Coeffs c{1};
    for (int j = 1; j <= level; ++j) {
        Coeffs next(c.size() + static_cast<std::size_t>(j));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] -= c[i];
            next[i + static_cast<std::size_t>(j)] += c[i];
        }
        c = std::move(next);
    }
    return c;
}

// Remainder modulo a monic divisor; result has size deg(divisor).
Coeffs remainder_monic(Coeffs p, const Coeffs& divisor) {
    const std::size_t d = divisor.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        const Integer c = p[i];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * divisor[j];
    }
    p.resize(d);
    return p;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void require_level(int level) {
    if (level < 1) throw RangeError("Habiro level must be positive");
}

}  // namespace

HabiroElement habiro_reduce(const LaurentPoly& p, int level) {
    require_level(level);
    if (!p.is_in_q()) throw NotInQ(p.to_string());
    if (!p.is_integral()) throw IntegralityViolation("Habiro reduction needs integer coefficients: " + p.to_string());
    HabiroElement x;
    x.level_ = level;
    if (p.is_zero()) return x;

    const int low = p.min_exp() / 4;
    const int shift = std::max(0, -low);
    Coeffs poly(static_cast<std::size_t>(p.max_exp() / 4 + shift) + 1);
    for (const auto& [e, c] : p.terms()) poly[static_cast<std::size_t>(e / 4 + shift)] = c.get_num();

    const Coeffs divisor = pochhammer_coeffs(level);
    Coeffs r = remainder_monic(std::move(poly), divisor);
    if (shift > 0) {
        // (q;q)_N = c_0 + q·D_1 with c_0 = ±1, hence q^{-1} ≡ -c_0·D_1.
        Coeffs qinv(divisor.begin() + 1, divisor.end());
        const Integer c0 = divisor[0];
        for (auto& c : qinv) c *= -c0;
        for (int s = 0; s < shift; ++s) r = remainder_monic(multiply(r, qinv), divisor);
    }
    x.rep_ = LaurentPoly::from_q_coeffs(r);
    x.unit_shift_ = shift;
    return x;
}

HabiroElement habiro_from_parts(int level, const LaurentPoly& rep, int unit_shift) {
    HabiroElement x = habiro_reduce(rep, level);
    x.unit_shift_ = unit_shift;
    return x;
}

HabiroElement HabiroElement::at_level(int level) const {
    if (level > level_) throw LevelTooLow("cannot lift from level " + std::to_string(level_) + " to " + std::to_string(level));
    HabiroElement x = habiro_reduce(rep_, level);
    x.unit_shift_ = unit_shift_;
    return x;
}

HabiroElement operator+(const HabiroElement& a, const HabiroElement& b) {
    const int n = std::min(a.level_, b.level_);
    return habiro_reduce(a.rep_ + b.rep_, n);
}

HabiroElement operator-(const HabiroElement& a, const HabiroElement& b) {
    const int n = std::min(a.level_, b.level_);
    return habiro_reduce(a.rep_ - b.rep_, n);
}

HabiroElement operator*(const HabiroElement& a, const HabiroElement& b) {
    const int n = std::min(a.level_, b.level_);
    return habiro_reduce(a.rep_ * b.rep_, n);
}

bool congruent(const HabiroElement& x, const HabiroElement& y) {
    const int n = std::min(x.level(), y.level());
    return x.at_level(n).representative() == y.at_level(n).representative();
}

OmegaTruncation omega(int sign, int max_index) {
    if (sign != 1 && sign != -1) throw RangeError("omega sign must be ±1");
    if (max_index < 0) throw RangeError("truncation index must be nonnegative");
    OmegaTruncation w{sign, {}};
    for (int i = 0; i <= max_index; ++i) {
        // v^{±i(i+3)/2} = w^{±i(i+3)}; i(i+3) is always even.
        LaurentPoly c = LaurentPoly::w_power(sign * i * (i + 3));
        if (sign < 0 && i % 2 == 1) c = -c;
        w.terms.push_back(std::move(c));
    }
    return w;
}

std::vector<LaurentPoly> pprime_series_product(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    if (n == 0) return {};
    const int max_index = static_cast<int>(n) - 1;
    std::vector<LaurentPoly> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        // P'_i P'_j lies in the span of P'_{max(i,j)}, ... so pairs past N drop out.
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const auto prod = pprime_product(static_cast<int>(i), static_cast<int>(j), max_index);
            const LaurentPoly ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!prod[k].is_zero()) out[k] += ab * prod[k];
        }
    }
    return out;
}

LaurentPoly pprime_bridge(int n) {
    return v_minus_vinv().pow(static_cast<unsigned>(n)) * exact_div(quantum_factorial(2 * n + 1), quantum_factorial(n));
}

HabiroElement surgery_invariant(const Link& link, int level) {
    require_level(level);
    const SurgeryLink checked = validate_surgery_input(link);
    const std::size_t l = link.num_components();
    const Link zero_framed = link.with_framings(std::vector<int>(l, 0));

    // Component with framing f is colored by omega^{-f}.
    std::vector<OmegaTruncation> kernels;
    for (int f : link.target_framings()) kernels.push_back(omega(-f, level));
    std::vector<BasisElement> basis;
    for (int i = 0; i <= level; ++i) basis.push_back(p_basis(i, PBasis::PPrime));

    std::size_t grid = 1;
    for (std::size_t c = 0; c < l; ++c) grid *= static_cast<std::size_t>(level) + 1;

    JonesEvaluator eval(zero_framed);
    std::vector<LaurentPoly> terms(grid);
    parallel_for(grid, [&](std::size_t index) {
        std::vector<BasisElement> colors;
        LaurentPoly coeff(1L);
        std::size_t rest = index;
        for (std::size_t c = 0; c < l; ++c) {
            const std::size_t i = rest % (static_cast<std::size_t>(level) + 1);
            rest /= static_cast<std::size_t>(level) + 1;
            colors.push_back(basis[i]);
            coeff *= kernels[c].terms[i];
        }
        const LaurentPoly value = evaluate_basis(eval, colors);
        if (!value.is_integral() || !value.is_in_v())
            throw IntegralityViolation("J_L on the P' basis left Z[v, v^-1]: " + value.to_string());
        terms[index] = coeff * value;
    });
    LaurentPoly total;
    for (const auto& t : terms) total += t;
    if (!total.is_in_q() || !total.is_integral())
        throw IntegralityViolation("surgery sum is not in Z[q, q^-1]: " + total.to_string());
    return habiro_reduce(total, level);
}

HabiroElement knot_surgery_invariant(const CyclotomicExpansion& a, int framing, int level) {
    require_level(level);
    if (framing != 1 && framing != -1) throw BadFraming("surgery framing must be ±1");
    if (a.max_index() < level) throw InsufficientCoefficients("need a_0..a_" + std::to_string(level));
    const OmegaTruncation kernel = omega(-framing, level);
    LaurentPoly total;
    for (int n = 0; n <= level; ++n)
        total += kernel.terms[static_cast<std::size_t>(n)] * pprime_bridge(n) * a.a[static_cast<std::size_t>(n)];
    if (!total.is_in_q() || !total.is_integral())
        throw IntegralityViolation("knot surgery sum is not in Z[q, q^-1]: " + total.to_string());
    return habiro_reduce(total, level);
}

}  // namespace sl2inv
