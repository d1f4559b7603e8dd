#pragma once

#include <optional>
#include <vector>

#include "sl2inv/laurent_poly.hpp"

namespace sl2inv {

// Dense row-major matrix with LaurentPoly entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix diagonal(const std::vector<LaurentPoly>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

    PolyMatrix pow(unsigned k) const;
    LaurentPoly trace() const;
    // The scalar s when the matrix equals s·I.
    std::optional<LaurentPoly> as_scalar() const;
    bool is_upper_triangular() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentPoly> data_;
};

// Kronecker product, basis ordered lexicographically (row index of a is major).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

// Exact inverse of an upper-triangular matrix with monomial diagonal, by back
// substitution.  Raises SingularMatrix otherwise.
PolyMatrix inverse_upper_triangular(const PolyMatrix& m);

}  // namespace sl2inv
