#include "sl2inv/repr_ring.hpp"

#include <cstdlib>

#include "sl2inv/errors.hpp"

namespace sl2inv {

ReprRingElt ReprRingElt::irrep_class(int k, LaurentPoly coeff) {
    if (k < 0) throw RangeError("irrep index must be nonnegative");
    ReprRingElt r;
    r.add_term(k, coeff);
    return r;
}

LaurentPoly ReprRingElt::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

int ReprRingElt::max_index() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void ReprRingElt::add_term(int k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ReprRingElt& ReprRingElt::operator+=(const ReprRingElt& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

ReprRingElt& ReprRingElt::operator-=(const ReprRingElt& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

ReprRingElt operator*(const LaurentPoly& s, const ReprRingElt& a) {
    ReprRingElt r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
}

ReprRingElt operator*(const ReprRingElt& a, const ReprRingElt& b) {
    ReprRingElt r;
    for (const auto& [m, cm] : a.terms_)
        for (const auto& [n, cn] : b.terms_) {
            const LaurentPoly c = cm * cn;
            for (int i = std::abs(m - n); i <= m + n; i += 2) r.add_term(i, c);
        }
    return r;
}

std::string ReprRingElt::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")[V" + std::to_string(k + 1) + "]";
    }
    return s;
}

ReprRingElt multiply_classes(int m, int n) {
    if (m < 0 || n < 0) throw RangeError("irrep index must be nonnegative");
    ReprRingElt r;
    for (int i = std::abs(m - n); i <= m + n; i += 2) r.add_term(i, LaurentPoly(1L));
    return r;
}

}  // namespace sl2inv
