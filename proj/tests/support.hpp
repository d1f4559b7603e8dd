#pragma once

// Shared fixtures for the test binaries: the small knot corpus, seeded random
// generators, and oracles that share no code with the library's algorithms.

#include <complex>
#include <ostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sl2inv/laurent_poly.hpp"
#include "sl2inv/links.hpp"

namespace sl2inv {

// Lets doctest print values in failed assertions.
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace sl2inv

namespace sl2inv::testing {

struct NamedKnot {
    const char* name;
    const char* braid;
};

// Trefoils: (σ_1^{-1})^3 closes to the knot whose a_n carry positive q-powers.
inline const NamedKnot kKnots[] = {
    {"unknot", "strands:1"},
    {"3_1+", "strands:2 -1 -1 -1"},
    {"3_1-", "strands:2 1 1 1"},
    {"4_1", "strands:3 1 -2 1 -2"},
};

inline Link knot(const char* braid, int framing = 0) { return Link(parse_braid(braid), {framing}); }

// Expected a_n: δ_{n,0}, (-1)^n q^{±n(n+3)/2}, 1.
inline LaurentPoly expected_a(const std::string& name, int n) {
    if (name == "unknot") return n == 0 ? LaurentPoly(1L) : LaurentPoly();
    if (name == "4_1") return LaurentPoly(1L);
    const int e = n * (n + 3) / 2;
    const long sign = n % 2 == 0 ? 1 : -1;
    return LaurentPoly::q_power(name == "3_1+" ? e : -e) * Rational(sign);
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed'2024ULL);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Sparse polynomial in w; occasionally with non-integral coefficients.
inline LaurentPoly random_poly(int max_terms = 4, int span = 8, bool rational = true) {
    std::vector<LaurentPoly::Term> terms;
    const int count = uniform(0, max_terms);
    for (int i = 0; i < count; ++i) {
        Rational c(uniform(-6, 6), rational && uniform(0, 3) == 0 ? uniform(1, 4) : 1);
        c.canonicalize();
        terms.emplace_back(uniform(-span, span), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

inline BraidWord random_braid(int strands, int length) {
    BraidWord b{strands, {}};
    for (int i = 0; i < length; ++i) {
        const int g = uniform(1, strands - 1);
        b.word.push_back(uniform(0, 1) ? g : -g);
    }
    return b;
}

// Kauffman bracket of the braid closure by a full state sum: every crossing
// is smoothed either as the identity or as a cup-cap, and the closed loops are
// counted with a union-find.  σ_i ↦ A·1 + A^{-1}·e_i, σ_i^{-1} ↦ A^{-1}·1 + A·e_i,
// each loop contributes d = -A^2 - A^{-2}.  The result is a polynomial in A.
class BracketOracle {
public:
    // A is taken to be `a_sign`·w^{a_exp}.
    BracketOracle(int a_sign, int a_exp) : a_sign_(a_sign), a_exp_(a_exp) {}

    LaurentPoly operator()(const BraidWord& b) const {
        const int s = b.strands;
        const int m = static_cast<int>(b.word.size());
        const LaurentPoly a = LaurentPoly::w_power(a_exp_) * Rational(a_sign_);
        const LaurentPoly a_inv = LaurentPoly::w_power(-a_exp_) * Rational(a_sign_);
        const LaurentPoly d = -(a * a) - (a_inv * a_inv);
        LaurentPoly total;
        for (unsigned long state = 0; state < (1UL << m); ++state) {
            std::vector<int> parent(static_cast<std::size_t>((m + 1) * s));
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                return x;
            };
            auto join = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
            auto node = [s](int level, int pos) { return level * s + pos; };
            int a_count = 0;
            for (int t = 0; t < m; ++t) {
                const int g = b.word[static_cast<std::size_t>(t)];
                const int i = std::abs(g) - 1;
                const bool cupcap = (state >> t) & 1UL;
                // The A-smoothing is the identity for σ_i and the cup-cap for σ_i^{-1}.
                a_count += (cupcap == (g < 0)) ? 1 : -1;
                for (int p = 0; p < s; ++p)
                    if (p != i && p != i + 1) join(node(t, p), node(t + 1, p));
                if (cupcap) {
                    join(node(t, i), node(t, i + 1));
                    join(node(t + 1, i), node(t + 1, i + 1));
                } else {
                    join(node(t, i), node(t + 1, i));
                    join(node(t, i + 1), node(t + 1, i + 1));
                }
            }
            for (int p = 0; p < s; ++p) join(node(m, p), node(0, p));
            int loops = 0;
            for (int x = 0; x < (m + 1) * s; ++x)
                if (find(x) == x) ++loops;
            const LaurentPoly weight = a_count >= 0 ? a.pow(static_cast<unsigned>(a_count))
                                                    : a_inv.pow(static_cast<unsigned>(-a_count));
            total += weight * d.pow(static_cast<unsigned>(loops));
        }
        return total;
    }

private:
    int a_sign_;
    int a_exp_;
};

// Two colored presentations that must give the same 0-framed invariant.
struct MoveCase {
    Link before;
    std::vector<int> before_colors;
    Link after;
    std::vector<int> after_colors;
    std::string description;
};

inline std::vector<int> random_colors(std::size_t count, int max_color) {
    std::vector<int> c(count);
    for (int& x : c) x = uniform(0, max_color);
    return c;
}

inline std::string describe(const BraidWord& a, const BraidWord& b) { return format_braid(a) + "  vs  " + format_braid(b); }

// Braid relation σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1} (in one of its three
// sign patterns) spliced into a random word, or a far commutation.  The
// permutation is unchanged, so component indices agree on both sides.
inline MoveCase random_yang_baxter_case(int max_strands, int max_color) {
    const int s = uniform(3, max_strands);
    BraidWord w = random_braid(s, uniform(0, 5));
    const int i = uniform(1, s - 2);
    std::vector<int> lhs, rhs;
    switch (uniform(0, 3)) {
        case 0: lhs = {i, i + 1, i}; rhs = {i + 1, i, i + 1}; break;
        case 1: lhs = {-i, -(i + 1), -i}; rhs = {-(i + 1), -i, -(i + 1)}; break;
        case 2: lhs = {i, i + 1, -i}; rhs = {-(i + 1), i, i + 1}; break;
        default:
            if (s >= 4) {
                const int j = uniform(1, s - 3);
                const int k = uniform(j + 2, s - 1);
                const int sj = uniform(0, 1) ? j : -j, sk = uniform(0, 1) ? k : -k;
                lhs = {sj, sk};
                rhs = {sk, sj};
            } else {
                lhs = {i, -i};
                rhs = {};
            }
    }
    const auto at = static_cast<std::ptrdiff_t>(uniform(0, static_cast<int>(w.word.size())));
    BraidWord a = w, b = w;
    a.word.insert(a.word.begin() + at, lhs.begin(), lhs.end());
    b.word.insert(b.word.begin() + at, rhs.begin(), rhs.end());
    Link la(a), lb(b);
    std::vector<int> colors = random_colors(la.num_components(), max_color);
    return {la, colors, lb, colors, "braid relation: " + describe(a, b)};
}

// Markov moves: conjugation W ↦ σ W σ^{-1} or stabilization W ↦ W σ_s^{±1}
// on one more strand.  Colors follow the components across the move.
inline MoveCase random_markov_case(int max_strands, int max_color) {
    if (uniform(0, 1) == 0) {
        const int s = uniform(2, max_strands - 1);
        BraidWord w = random_braid(s, uniform(0, 6));
        BraidWord st{s + 1, w.word};
        st.word.push_back(uniform(0, 1) ? s : -s);
        Link la(w), lb(st);
        // The new strand joins the component through position s-1, whose
        // smallest position is unchanged, so the component order survives.
        std::vector<int> colors = random_colors(la.num_components(), max_color);
        return {la, colors, lb, colors, "stabilization: " + describe(w, st)};
    }
    const int s = uniform(2, max_strands);
    BraidWord w = random_braid(s, uniform(0, 6));
    const int g = uniform(1, s - 1) * (uniform(0, 1) ? 1 : -1);
    BraidWord conj{s, {g}};
    conj.word.insert(conj.word.end(), w.word.begin(), w.word.end());
    conj.word.push_back(-g);
    Link la(w), lb(conj);
    std::vector<int> colors = random_colors(la.num_components(), max_color);
    // Position p of the conjugate sits at position τ(p) of w after the first letter.
    const int i = std::abs(g) - 1;
    std::vector<int> after(lb.num_components());
    for (std::size_t c = 0; c < lb.num_components(); ++c) {
        int p = lb.components()[c].front();
        if (p == i) p = i + 1;
        else if (p == i + 1) p = i;
        after[c] = colors[static_cast<std::size_t>(la.component_of_position(p))];
    }
    return {la, colors, lb, after, "conjugation: " + describe(w, conj)};
}

// Numerical value of p at w = exp(2πi·k/(4N)), so q = exp(2πi·k/N).
inline std::complex<double> eval_complex(const LaurentPoly& p, int k, int n) {
    std::complex<double> sum = 0;
    for (const auto& [e, c] : p.terms())
        sum += c.get_d() * std::polar(1.0, 2 * M_PI * k * e / (4.0 * n));
    return sum;
}

}  // namespace sl2inv::testing
