#pragma once

#include "sl2inv/laurent_poly.hpp"

namespace sl2inv {

// Balanced quantum integer [n] = (v^n - v^{-n}) / (v - v^{-1}).
LaurentPoly quantum_int(int n);

// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly quantum_factorial(int n);

// (q;q)_n = (q - 1)(q^2 - 1)...(q^n - 1).
LaurentPoly q_pochhammer(int n);

// v - v^{-1}
LaurentPoly v_minus_vinv();

// v^j - v^{-j}
LaurentPoly v_diff(int j);

}  // namespace sl2inv
