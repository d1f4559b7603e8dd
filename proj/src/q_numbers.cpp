#include "sl2inv/q_numbers.hpp"

#include <stdexcept>

namespace sl2inv {

LaurentPoly quantum_int(int n) {
    if (n == 0) return {};
    const int sign = n < 0 ? -1 : 1;
    const int m = n < 0 ? -n : n;
    // v^{m-1} + v^{m-3} + ... + v^{-(m-1)}
    std::vector<LaurentPoly::Term> terms;
    for (int k = m - 1; k >= -(m - 1); k -= 2) terms.emplace_back(2 * k, Rational(sign));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
    LaurentPoly r(1L);
    for (int k = 2; k <= n; ++k) r *= quantum_int(k);
    return r;
}

LaurentPoly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative argument");
    LaurentPoly r(1L);
    for (int j = 1; j <= n; ++j) r *= LaurentPoly::q_power(j) - LaurentPoly(1L);
    return r;
}

LaurentPoly v_minus_vinv() { return v_diff(1); }

LaurentPoly v_diff(int j) { return LaurentPoly::v_power(j) - LaurentPoly::v_power(-j); }

}  // namespace sl2inv
