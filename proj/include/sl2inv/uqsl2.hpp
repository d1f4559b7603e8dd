#pragma once

#include "sl2inv/laurent_poly.hpp"
#include "sl2inv/poly_matrix.hpp"

namespace sl2inv {

// The irreducible module V_{n+1} on basis v_0, ..., v_n:
//   K v_i = v^{n-2i} v_i,  E v_i = [n+1-i] v_{i-1},  F v_i = [i+1] v_{i+1}.
struct Rep {
    int n = 0;
    PolyMatrix E, F, K, Kinv;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(n) + 1; }
    // Weight of v_i, i.e. the eigenvalue of H.
    int weight(std::size_t i) const noexcept { return n - 2 * static_cast<int>(i); }
};

// Operator on V_{m+1} ⊗ V_{n+1}, basis v_i ⊗ v_j at index i*(n+1) + j.
struct TensorOperator {
    int m = 0;
    int n = 0;
    PolyMatrix matrix;
};

// Memoized; the returned reference stays valid for the program's lifetime.
const Rep& irrep(int n);

// R = v^{H⊗H/2} sum_k v^{k(k-1)/2} (v - v^{-1})^k / [k]! E^k ⊗ F^k on V_{m+1} ⊗ V_{n+1}.
// The sum stops at k = min(m, n).
const TensorOperator& rmatrix(int m, int n);

// Exact inverse of rmatrix(m, n).  R is upper triangular in the lexicographic
// basis with monomial diagonal, so back substitution is exact.
const TensorOperator& rmatrix_inverse(int m, int n);

// Flip V_{m+1} ⊗ V_{n+1} → V_{n+1} ⊗ V_{m+1}.
PolyMatrix swap_operator(int m, int n);

// tr(K·A) on V_{n+1}.
LaurentPoly quantum_trace(const Rep& rep, const PolyMatrix& a);

// Scalar of the ribbon element r = K^{-1} sum S(R_(2)) R_(1) on V_{n+1},
// computed from the matrices.  Always ± a monomial; NotScalar otherwise.
LaurentPoly twist_scalar(int n);

// Scalar of C = (v - v^{-1})^2 FE + vK + v^{-1}K^{-1} on V_{n+1}.
LaurentPoly casimir_scalar(int n);

// Scalar of sigma_k = prod_{i=1}^k (C^2 - (v^i + v^{-i})^2) on V_{m+1}.
LaurentPoly sigma_scalar(int k, int m);

}  // namespace sl2inv
