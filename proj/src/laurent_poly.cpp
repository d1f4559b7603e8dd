#include "sl2inv/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

#include "sl2inv/errors.hpp"

namespace sl2inv {

namespace {

bool is_int(const Rational& r) { return r.get_den() == 1; }

// Builds the sparse term list from a dense buffer indexed from `low`.
std::vector<LaurentPoly::Term> compress(int low, std::vector<Rational>& dense) {
    std::vector<LaurentPoly::Term> out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (sgn(dense[i]) != 0) out.emplace_back(low + static_cast<int>(i), std::move(dense[i]));
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.emplace_back(0, Rational(constant));
}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(int w_exp, const Rational& coeff) {
    LaurentPoly p;
    if (sgn(coeff) != 0) p.terms_.emplace_back(w_exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
        } else if (sgn(t.second) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

LaurentPoly LaurentPoly::from_q_coeffs(const std::vector<Integer>& coeffs, int q_shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0)
            p.terms_.emplace_back(4 * (static_cast<int>(i) + q_shift), Rational(coeffs[i]));
    }
    return p;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().first;
}

Rational LaurentPoly::coeff(int w_exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w_exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == w_exp) return it->second;
    return 0;
}

bool LaurentPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_int(t.second); });
}

bool LaurentPoly::is_in_q() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 4 == 0; });
}

bool LaurentPoly::is_in_v() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= scalar;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int low = a.min_exp() + b.min_exp();
    const std::size_t span = static_cast<std::size_t>(a.max_exp() + b.max_exp() - low + 1);
    LaurentPoly r;
    if (a.is_integral() && b.is_integral()) {
        // Integer accumulation avoids a gcd per step.
        std::vector<Integer> acc(span);
        for (const auto& [ea, ca] : a.terms_) {
            const mpz_srcptr za = ca.get_num_mpz_t();
            for (const auto& [eb, cb] : b.terms_)
                mpz_addmul(acc[ea + eb - low].get_mpz_t(), za, cb.get_num_mpz_t());
        }
        for (std::size_t i = 0; i < span; ++i)
            if (sgn(acc[i]) != 0) r.terms_.emplace_back(low + static_cast<int>(i), Rational(acc[i]));
        return r;
    }
    std::vector<Rational> acc(span);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb - low] += ca * cb;
    r.terms_ = compress(low, acc);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(int w_shift) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += w_shift;
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    int step = 1;
    const char* var = "w";
    if (is_in_q()) {
        step = 4;
        var = "q";
    } else if (is_in_v()) {
        step = 2;
        var = "v";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first / step;
        Rational c = it->second;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        const bool unit = (c == 1);
        if (!unit || e == 0) os << c.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << var;
            if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NonExactDivision("division by zero");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        const auto& [eb, cb] = b.terms().front();
        LaurentPoly r = a.shifted(-eb);
        r *= Rational(1) / cb;
        return r;
    }
    const int q_low = a.min_exp() - b.min_exp();
    const int q_high = a.max_exp() - b.max_exp();
    if (q_high < q_low)
        throw NonExactDivision("(" + a.to_string() + ") / (" + b.to_string() + ")");

    const int low = a.min_exp();
    std::vector<Rational> rem(static_cast<std::size_t>(a.max_exp() - low + 1));
    for (const auto& [e, c] : a.terms()) rem[e - low] = c;
    const Rational& lead = b.terms().back().second;
    const int b_high = b.max_exp();

    std::vector<LaurentPoly::Term> quot;
    for (int e = q_high; e >= q_low; --e) {
        Rational& top = rem[e + b_high - low];
        if (sgn(top) == 0) continue;
        Rational c = top / lead;
        for (const auto& [eb, cb] : b.terms()) rem[e + eb - low] -= c * cb;
        quot.emplace_back(e, std::move(c));
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw NonExactDivision("(" + a.to_string() + ") / (" + b.to_string() + ")");
    return LaurentPoly::from_terms(std::move(quot));
}

bool divides_integrally(const LaurentPoly& b, const LaurentPoly& a) {
    try {
        return exact_div(a, b).is_integral();
    } catch (const NonExactDivision&) {
        return false;
    }
}

}  // namespace sl2inv
