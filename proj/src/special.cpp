#include "sl2inv/special.hpp"

#include "sl2inv/errors.hpp"

namespace sl2inv {

CycloNumber wrt(const HabiroElement& x, int root_order) {
    if (root_order < 1) throw RangeError("root order must be positive");
    if (x.level() < root_order)
        throw LevelTooLow("level " + std::to_string(x.level()) + " cannot be evaluated at a primitive " +
                          std::to_string(root_order) + "-th root of unity");
    return eval_at_root(x.representative(), root_order);
}

QSeries ohtsuki_series(const HabiroElement& x, std::size_t order) {
    if (order > static_cast<std::size_t>(x.level()))
        throw OrderTooHigh("order " + std::to_string(order) + " exceeds level " + std::to_string(x.level()));
    return expand_at_one(x.representative(), order);
}

int root_multiplicity(int level, int root_order) {
    if (root_order < 1) throw RangeError("root order must be positive");
    return level / root_order;
}

ZetaSeries iota_zeta(const HabiroElement& x, int root_order, std::size_t order) {
    const int valid = root_multiplicity(x.level(), root_order);
    if (order > static_cast<std::size_t>(valid))
        throw OrderTooHigh("order " + std::to_string(order) + " at zeta_" + std::to_string(root_order) +
                           " needs level ≥ " + std::to_string(static_cast<int>(order) * root_order));
    ZetaSeries s{root_order, std::vector<CycloNumber>(order, CycloNumber(root_order))};
    // f(zeta + t) = sum_k t^k sum_j c_j binom(j, k) zeta^{j-k}; the representative is a polynomial.
    Integer binom;
    for (const auto& [w, c] : x.representative().terms()) {
        const int j = w / 4;
        for (std::size_t k = 0; k < order && static_cast<int>(k) <= j; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), k);
            const CycloNumber term = CycloNumber::zeta_power(root_order, j - static_cast<int>(k)) *
                                     CycloNumber(root_order, c.get_num() * binom);
            s.coeffs[k] += term;
        }
    }
    return s;
}

std::string ZetaSeries::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) out += " + ";
        out += "(" + coeffs[k].to_string() + ")";
        if (k > 0) out += "*(q-z" + std::to_string(root_order) + ")^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace sl2inv
