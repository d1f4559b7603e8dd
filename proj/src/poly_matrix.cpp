#include "sl2inv/poly_matrix.hpp"

#include "sl2inv/errors.hpp"

namespace sl2inv {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1L);
    return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
    PolyMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    PolyMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& a) {
    PolyMatrix r = a;
    for (auto& x : r.data_)
        if (!x.is_zero()) x = s * x;
    return r;
}

PolyMatrix PolyMatrix::pow(unsigned k) const {
    if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
    PolyMatrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

LaurentPoly PolyMatrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
    LaurentPoly t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

std::optional<LaurentPoly> PolyMatrix::as_scalar() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j) {
                if ((*this)(i, j) != (*this)(0, 0)) return std::nullopt;
            } else if (!(*this)(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return (*this)(0, 0);
}

bool PolyMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i && j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

PolyMatrix inverse_upper_triangular(const PolyMatrix& m) {
    if (!m.is_square()) throw SingularMatrix("non-square matrix");
    if (!m.is_upper_triangular()) throw SingularMatrix("matrix is not upper triangular");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (!m(i, i).is_monomial()) throw SingularMatrix("diagonal entry is not a unit: " + m(i, i).to_string());

    PolyMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = c + 1; r-- > 0;) {
            LaurentPoly acc = (r == c) ? LaurentPoly(1L) : LaurentPoly();
            for (std::size_t k = r + 1; k <= c; ++k)
                if (!m(r, k).is_zero() && !inv(k, c).is_zero()) acc -= m(r, k) * inv(k, c);
            inv(r, c) = exact_div(acc, m(r, r));
        }
    }
    return inv;
}

}  // namespace sl2inv
