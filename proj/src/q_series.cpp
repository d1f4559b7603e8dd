#include "sl2inv/q_series.hpp"

#include <algorithm>
#include <sstream>

#include "sl2inv/errors.hpp"

namespace sl2inv {

QSeries QSeries::truncated(std::size_t order) const {
    if (order > coeffs_.size()) throw OrderTooHigh("cannot extend a truncated series");
    return QSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const std::size_t d = std::min(a.order(), b.order());
    std::vector<Integer> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const std::size_t d = std::min(a.order(), b.order());
    std::vector<Integer> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
    return QSeries(std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t d = std::min(a.order(), b.order());
    std::vector<Integer> c(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; i + j < d; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QSeries(std::move(c));
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) os << " + ";
        os << coeffs_[k].get_str();
        if (k == 1) os << "*(q-1)";
        if (k > 1) os << "*(q-1)^" << k;
    }
    os << " + O((q-1)^" << coeffs_.size() << ")";
    return os.str();
}

QSeries expand_at_one(const LaurentPoly& p, std::size_t order) {
    if (!p.is_in_q()) throw NotInQ(p.to_string());
    if (!p.is_integral()) throw IntegralityViolation("expansion at q=1 needs integer coefficients: " + p.to_string());
    std::vector<Integer> c(order);
    Integer binom;
    for (const auto& [w, coeff] : p.terms()) {
        const long e = w / 4;
        // (1+t)^e = sum_k binom(e, k) t^k, with binom(e, k) = (-1)^k binom(k-e-1, k) for e < 0.
        for (std::size_t k = 0; k < order; ++k) {
            if (e >= 0) {
                if (static_cast<long>(k) > e) break;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), k);
            } else {
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(static_cast<long>(k) - e - 1), k);
                if (k % 2 == 1) binom = -binom;
            }
            c[k] += coeff.get_num() * binom;
        }
    }
    return QSeries(std::move(c));
}

}  // namespace sl2inv
