#pragma once

#include <string>
#include <vector>

#include "sl2inv/laurent_poly.hpp"

namespace sl2inv {

// Truncated power series sum_{k<D} c_k (q-1)^k + O((q-1)^D) over Z.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }

    QSeries truncated(std::size_t order) const;

    // Binary operations truncate to the smaller order.
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

    std::string to_string() const;

private:
    std::vector<Integer> coeffs_;
};

// Taylor coefficients of p at q = 1 in powers of (q - 1), to order D.
QSeries expand_at_one(const LaurentPoly& p, std::size_t order);

}  // namespace sl2inv
