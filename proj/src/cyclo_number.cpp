#include "sl2inv/cyclo_number.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sl2inv/errors.hpp"

namespace sl2inv {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw InternalError("cyclotomic: degree underflow");
    std::vector<Integer> quot(num.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer c = num[i + dd];
        quot[i] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (sgn(r) != 0) throw InternalError("cyclotomic: inexact division");
    return quot;
}

// In-place remainder modulo a monic polynomial; result has size deg(den).
void reduce_monic(std::vector<Integer>& p, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t i = p.size(); i-- > dd;) {
        const Integer c = p[i];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * den[j];
    }
    p.resize(dd);
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int order) {
    if (order < 1) throw RangeError("cyclotomic polynomial order must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<Integer>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }
    std::vector<Integer> num(static_cast<std::size_t>(order) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(order)] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    // std::map never invalidates references, so returning into the cache is safe.
    return cache.emplace(order, std::move(num)).first->second;
}

CycloNumber::CycloNumber(int order) : order_(order) {
    residue_.assign(cyclotomic_polynomial(order).size() - 1, Integer(0));
}

CycloNumber::CycloNumber(int order, const Integer& value) : CycloNumber(order) { residue_[0] = value; }

CycloNumber CycloNumber::from_poly(int order, std::vector<Integer> coeffs) {
    CycloNumber r(order);
    const auto& phi = cyclotomic_polynomial(order);
    if (coeffs.size() < phi.size() - 1) coeffs.resize(phi.size() - 1);
    reduce_monic(coeffs, phi);
    r.residue_ = std::move(coeffs);
    return r;
}

CycloNumber CycloNumber::zeta_power(int order, int k) {
    if (order < 1) throw RangeError("root order must be positive");
    const int e = ((k % order) + order) % order;
    std::vector<Integer> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    return from_poly(order, std::move(c));
}

bool CycloNumber::is_zero() const {
    for (const auto& c : residue_)
        if (sgn(c) != 0) return false;
    return true;
}

void CycloNumber::check_order(const CycloNumber& other) const {
    if (order_ != other.order_)
        throw DimensionMismatch("cyclotomic orders " + std::to_string(order_) + " and " +
                                std::to_string(other.order_));
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
    check_order(rhs);
    for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] += rhs.residue_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
    check_order(rhs);
    for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] -= rhs.residue_[i];
    return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    a.check_order(b);
    std::vector<Integer> prod(a.residue_.size() + b.residue_.size());
    for (std::size_t i = 0; i < a.residue_.size(); ++i) {
        if (sgn(a.residue_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.residue_.size(); ++j) prod[i + j] += a.residue_[i] * b.residue_[j];
    }
    return CycloNumber::from_poly(a.order_, std::move(prod));
}

CycloNumber CycloNumber::galois(int a) const {
    if (std::gcd(a, order_) != 1) throw RangeError("galois exponent must be coprime to the order");
    std::vector<Integer> c(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < residue_.size(); ++i) {
        const long e = ((static_cast<long>(i) * a) % order_ + order_) % order_;
        c[static_cast<std::size_t>(e)] += residue_[i];
    }
    return from_poly(order_, std::move(c));
}

std::complex<double> CycloNumber::to_complex() const {
    std::complex<double> z = 0.0;
    for (std::size_t i = 0; i < residue_.size(); ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        z += residue_[i].get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string CycloNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = residue_.size(); i-- > 0;) {
        const Integer& c = residue_[i];
        if (sgn(c) == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

CycloNumber eval_at_root(const LaurentPoly& p, int order) {
    if (order < 1) throw RangeError("root order must be positive");
    if (!p.is_in_q()) throw NotInQ(p.to_string());
    if (!p.is_integral()) throw IntegralityViolation("evaluation at a root of unity needs integer coefficients: " + p.to_string());
    std::vector<Integer> c(static_cast<std::size_t>(order));
    for (const auto& [e, coeff] : p.terms()) {
        const int k = ((e / 4) % order + order) % order;
        c[static_cast<std::size_t>(k)] += coeff.get_num();
    }
    return CycloNumber::from_poly(order, std::move(c));
}

}  // namespace sl2inv
