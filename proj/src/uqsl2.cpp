#include "sl2inv/uqsl2.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "sl2inv/errors.hpp"
#include "sl2inv/q_numbers.hpp"

namespace sl2inv {

namespace {

// Build-on-demand table: lookups share the lock, a miss builds outside the
// lock and the first writer wins.  Values live behind unique_ptr so that
// references handed out never move.
template <typename Key, typename Value>
class MemoTable {
public:
    template <typename Build>
    const Value& get(const Key& key, Build&& build) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return *it->second;
        }
        auto fresh = std::make_unique<Value>(build());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(fresh));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> table_;
};

Rep build_irrep(int n) {
    if (n < 0) throw RangeError("irrep weight must be nonnegative");
    Rep rep;
    rep.n = n;
    const std::size_t d = rep.dim();
    rep.E = PolyMatrix(d, d);
    rep.F = PolyMatrix(d, d);
    std::vector<LaurentPoly> k(d), kinv(d);
    for (std::size_t i = 0; i < d; ++i) {
        const int wt = rep.weight(i);
        k[i] = LaurentPoly::v_power(wt);
        kinv[i] = LaurentPoly::v_power(-wt);
        if (i > 0) rep.E(i - 1, i) = quantum_int(n + 1 - static_cast<int>(i));
        if (i < d - 1) rep.F(i + 1, i) = quantum_int(static_cast<int>(i) + 1);
    }
    rep.K = PolyMatrix::diagonal(k);
    rep.Kinv = PolyMatrix::diagonal(kinv);
    return rep;
}

// E^k / [k]!, exact entrywise.
PolyMatrix divided_power(const PolyMatrix& e, int k) {
    PolyMatrix p = e.pow(static_cast<unsigned>(k));
    const LaurentPoly fact = quantum_factorial(k);
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) p(i, j) = exact_div(p(i, j), fact);
    return p;
}

// v^{k(k-1)/2} (v - v^{-1})^k
LaurentPoly r_prefactor(int k) {
    return LaurentPoly::w_power(k * (k - 1)) * v_minus_vinv().pow(static_cast<unsigned>(k));
}

TensorOperator build_rmatrix(int m, int n) {
    const Rep& a = irrep(m);
    const Rep& b = irrep(n);
    PolyMatrix sum(a.dim() * b.dim(), a.dim() * b.dim());
    for (int k = 0; k <= std::min(m, n); ++k)
        sum = sum + r_prefactor(k) * kron(divided_power(a.E, k), b.F.pow(static_cast<unsigned>(k)));

    // v^{H⊗H/2} on v_i ⊗ v_j is v^{wt_i wt_j / 2} = w^{wt_i wt_j}.
    std::vector<LaurentPoly> diag;
    diag.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) diag.push_back(LaurentPoly::w_power(a.weight(i) * b.weight(j)));
    return {m, n, PolyMatrix::diagonal(diag) * sum};
}

MemoTable<int, Rep>& rep_table() {
    static MemoTable<int, Rep> t;
    return t;
}

MemoTable<std::pair<int, int>, TensorOperator>& r_table() {
    static MemoTable<std::pair<int, int>, TensorOperator> t;
    return t;
}

MemoTable<std::pair<int, int>, TensorOperator>& rinv_table() {
    static MemoTable<std::pair<int, int>, TensorOperator> t;
    return t;
}

LaurentPoly require_scalar(const PolyMatrix& m, const char* what) {
    auto s = m.as_scalar();
    if (!s) throw NotScalar(std::string(what) + " does not act as a scalar");
    return *s;
}

}  // namespace

const Rep& irrep(int n) {
    return rep_table().get(n, [n] { return build_irrep(n); });
}

const TensorOperator& rmatrix(int m, int n) {
    if (m < 0 || n < 0) throw RangeError("rmatrix weights must be nonnegative");
    return r_table().get({m, n}, [m, n] { return build_rmatrix(m, n); });
}

const TensorOperator& rmatrix_inverse(int m, int n) {
    if (m < 0 || n < 0) throw RangeError("rmatrix weights must be nonnegative");
    return rinv_table().get({m, n}, [m, n] {
        const TensorOperator& r = rmatrix(m, n);
        TensorOperator inv{m, n, inverse_upper_triangular(r.matrix)};
        if (inv.matrix * r.matrix != PolyMatrix::identity(r.matrix.rows()))
            throw SingularMatrix("R^{-1} R != 1");
        return inv;
    });
}

PolyMatrix swap_operator(int m, int n) {
    const std::size_t dm = static_cast<std::size_t>(m) + 1;
    const std::size_t dn = static_cast<std::size_t>(n) + 1;
    PolyMatrix p(dm * dn, dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) p(j * dm + i, i * dn + j) = LaurentPoly(1L);
    return p;
}

LaurentPoly quantum_trace(const Rep& rep, const PolyMatrix& a) {
    if (a.rows() != rep.dim() || a.cols() != rep.dim())
        throw DimensionMismatch("quantum_trace: operator is not (n+1)x(n+1)");
    LaurentPoly t;
    for (std::size_t i = 0; i < rep.dim(); ++i) t += rep.K(i, i) * a(i, i);
    return t;
}

LaurentPoly twist_scalar(int n) {
    const Rep& rep = irrep(n);
    // With R = sum_λ Π_λ E^k ⊗ v^{λH/2} F^k, S(R_(2)) R_(1) contributes
    // S(F)^k v^{-H^2/2} E^k, and S(F) = -KF.
    std::vector<LaurentPoly> gauss;
    for (std::size_t i = 0; i < rep.dim(); ++i) gauss.push_back(LaurentPoly::w_power(-rep.weight(i) * rep.weight(i)));
    const PolyMatrix h2 = PolyMatrix::diagonal(gauss);
    const PolyMatrix s_f = LaurentPoly(-1L) * (rep.K * rep.F);

    PolyMatrix u(rep.dim(), rep.dim());
    for (int k = 0; k <= n; ++k)
        u = u + r_prefactor(k) * (s_f.pow(static_cast<unsigned>(k)) * h2 * divided_power(rep.E, k));
    const LaurentPoly s = require_scalar(rep.Kinv * u, "ribbon element");
    if (!s.is_monomial()) throw NotScalar("ribbon scalar is not a monomial: " + s.to_string());
    return s;
}

LaurentPoly casimir_scalar(int n) {
    const Rep& rep = irrep(n);
    const PolyMatrix c = v_minus_vinv().pow(2) * (rep.F * rep.E) + LaurentPoly::v_power(1) * rep.K +
                         LaurentPoly::v_power(-1) * rep.Kinv;
    return require_scalar(c, "Casimir element");
}

LaurentPoly sigma_scalar(int k, int m) {
    if (k < 0) throw RangeError("sigma index must be nonnegative");
    const LaurentPoly c2 = casimir_scalar(m).pow(2);
    LaurentPoly r(1L);
    for (int i = 1; i <= k; ++i) {
        const LaurentPoly s = LaurentPoly::v_power(i) + LaurentPoly::v_power(-i);
        r *= c2 - s * s;
    }
    return r;
}

}  // namespace sl2inv
