#include "sl2inv/jones.hpp"

#include <bit>
#include <cstdlib>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "sl2inv/errors.hpp"
#include "sl2inv/parallel.hpp"
#include "sl2inv/uqsl2.hpp"

namespace sl2inv {

namespace {

// Dense integer Laurent polynomial in w, used inside the state sum where
// every coefficient is integral and allocation-free accumulation matters.
struct ZPoly {
    int low = 0;
    std::vector<Integer> c;

    bool empty() const noexcept { return c.empty(); }

    static ZPoly from(const LaurentPoly& p) {
        ZPoly z;
        if (p.is_zero()) return z;
        if (!p.is_integral()) throw InternalError("non-integral braiding coefficient " + p.to_string());
        z.low = p.min_exp();
        z.c.resize(static_cast<std::size_t>(p.max_exp() - z.low + 1));
        for (const auto& [e, coeff] : p.terms()) z.c[static_cast<std::size_t>(e - z.low)] = coeff.get_num();
        return z;
    }

    LaurentPoly to_laurent(int shift = 0) const {
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sgn(c[i]) != 0) terms.emplace_back(low + static_cast<int>(i) + shift, Rational(c[i]));
        return LaurentPoly::from_terms(std::move(terms));
    }

    void cover(int lo, int hi) {
        if (c.empty()) {
            low = lo;
            c.resize(static_cast<std::size_t>(hi - lo + 1));
            return;
        }
        if (lo < low) {
            c.insert(c.begin(), static_cast<std::size_t>(low - lo), Integer());
            low = lo;
        }
        const int high = low + static_cast<int>(c.size()) - 1;
        if (hi > high) c.resize(c.size() + static_cast<std::size_t>(hi - high));
    }

    // *this += a * b
    void addmul(const ZPoly& a, const ZPoly& b) {
        if (a.empty() || b.empty()) return;
        cover(a.low + b.low, a.low + b.low + static_cast<int>(a.c.size() + b.c.size()) - 2);
        const int off = a.low + b.low - low;
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (sgn(a.c[i]) == 0) continue;
            mpz_srcptr ai = a.c[i].get_mpz_t();
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                if (sgn(b.c[j]) == 0) continue;
                mpz_addmul(c[static_cast<std::size_t>(off) + i + j].get_mpz_t(), ai, b.c[j].get_mpz_t());
            }
        }
    }

    void add_shifted(const ZPoly& a, int shift) {
        if (a.empty()) return;
        cover(a.low + shift, a.low + shift + static_cast<int>(a.c.size()) - 1);
        const auto off = static_cast<std::size_t>(a.low + shift - low);
        for (std::size_t i = 0; i < a.c.size(); ++i) c[off + i] += a.c[i];
    }
};

struct CrossTerm {
    int out_left;   // basis index now at position p
    int out_right;  // basis index now at position p+1
    ZPoly coeff;
};

// Braiding V_{a+1} ⊗ V_{b+1} → V_{b+1} ⊗ V_{a+1} for one letter, by input column.
struct CrossingTable {
    int a = 0;
    int b = 0;
    std::vector<std::vector<CrossTerm>> columns;  // index i*(b+1) + j
};

CrossingTable build_crossing(int a, int b, int sign) {
    CrossingTable t{a, b, {}};
    const int da = a + 1;
    const int db = b + 1;
    t.columns.resize(static_cast<std::size_t>(da * db));
    if (sign > 0) {
        // swap ∘ R_{a,b}
        const PolyMatrix& r = rmatrix(a, b).matrix;
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) {
                auto& col = t.columns[static_cast<std::size_t>(i * db + j)];
                for (int i2 = 0; i2 < da; ++i2)
                    for (int j2 = 0; j2 < db; ++j2) {
                        const LaurentPoly& e = r(static_cast<std::size_t>(i2 * db + j2), static_cast<std::size_t>(i * db + j));
                        if (!e.is_zero()) col.push_back({j2, i2, ZPoly::from(e)});
                    }
            }
    } else {
        // (swap ∘ R_{b,a})^{-1} = R_{b,a}^{-1} ∘ swap
        const PolyMatrix& rinv = rmatrix_inverse(b, a).matrix;
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) {
                auto& col = t.columns[static_cast<std::size_t>(i * db + j)];
                const auto in = static_cast<std::size_t>(j * da + i);
                for (int i2 = 0; i2 < db; ++i2)
                    for (int j2 = 0; j2 < da; ++j2) {
                        const LaurentPoly& e = rinv(static_cast<std::size_t>(i2 * da + j2), in);
                        if (!e.is_zero()) col.push_back({i2, j2, ZPoly::from(e)});
                    }
            }
    }
    return t;
}

const CrossingTable& crossing_table(int a, int b, int sign) {
    static std::shared_mutex mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<CrossingTable>> cache;
    const auto key = std::make_tuple(a, b, sign);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto fresh = std::make_unique<CrossingTable>(build_crossing(a, b, sign));
    std::unique_lock lock(mutex);
    return *cache.try_emplace(key, std::move(fresh)).first->second;
}

struct Step {
    int position;
    const CrossingTable* table;
};

class StateCodec {
public:
    StateCodec(int strands, int max_color) : strands_(strands) {
        bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(max_color))));
        if (bits_ * strands > 64) throw DimensionMismatch("too many strands for the state encoding");
        mask_ = (std::uint64_t{1} << bits_) - 1;
    }
    int get(std::uint64_t s, int p) const { return static_cast<int>((s >> (p * bits_)) & mask_); }
    std::uint64_t set(std::uint64_t s, int p, int v) const {
        const int sh = p * bits_;
        return (s & ~(mask_ << sh)) | (static_cast<std::uint64_t>(v) << sh);
    }

private:
    int strands_;
    int bits_ = 1;
    std::uint64_t mask_ = 1;
};

}  // namespace

LaurentPoly braid_closure_trace(const BraidWord& braid, std::span<const int> position_colors) {
    validate(braid);
    const int s = braid.strands;
    if (position_colors.size() != static_cast<std::size_t>(s))
        throw ColorCountMismatch("need one color per strand position");
    std::size_t dim = 1;
    int max_color = 0;
    for (int c : position_colors) {
        if (c < 0) throw RangeError("colors must be nonnegative");
        dim *= static_cast<std::size_t>(c) + 1;
        max_color = std::max(max_color, c);
        if (dim > kMaxStateSpace)
            throw DimensionMismatch("tensor space dimension exceeds " + std::to_string(kMaxStateSpace));
    }

    std::vector<int> colors(position_colors.begin(), position_colors.end());
    std::vector<Step> steps;
    steps.reserve(braid.word.size());
    for (int g : braid.word) {
        const int p = std::abs(g) - 1;
        steps.push_back({p, &crossing_table(colors[static_cast<std::size_t>(p)],
                                            colors[static_cast<std::size_t>(p) + 1], g > 0 ? 1 : -1)});
        std::swap(colors[static_cast<std::size_t>(p)], colors[static_cast<std::size_t>(p) + 1]);
    }
    if (!std::equal(colors.begin(), colors.end(), position_colors.begin()))
        throw DimensionMismatch("closure joins strands of different colors");

    const StateCodec codec(s, max_color);
    auto decode_start = [&](std::size_t index, int& weight) {
        std::uint64_t state = 0;
        weight = 0;
        for (int p = 0; p < s; ++p) {
            const auto d = static_cast<std::size_t>(position_colors[static_cast<std::size_t>(p)]) + 1;
            const int i = static_cast<int>(index % d);
            index /= d;
            state = codec.set(state, p, i);
            weight += position_colors[static_cast<std::size_t>(p)] - 2 * i;
        }
        return state;
    };

    // Chunks of start states are independent; each worker sums its diagonal entries.
    const std::size_t chunks = std::min<std::size_t>(dim, 64);
    std::vector<ZPoly> partial(chunks);
    parallel_for(chunks, [&](std::size_t chunk) {
        ZPoly acc;
        std::unordered_map<std::uint64_t, ZPoly> cur, next;
        for (std::size_t index = chunk; index < dim; index += chunks) {
            int weight = 0;
            const std::uint64_t start = decode_start(index, weight);
            cur.clear();
            ZPoly one;
            one.c.emplace_back(1);
            cur.emplace(start, std::move(one));
            for (const Step& st : steps) {
                next.clear();
                const int db = st.table->b + 1;
                for (const auto& [state, poly] : cur) {
                    const int i = codec.get(state, st.position);
                    const int j = codec.get(state, st.position + 1);
                    for (const CrossTerm& t : st.table->columns[static_cast<std::size_t>(i * db + j)]) {
                        std::uint64_t out = codec.set(state, st.position, t.out_left);
                        out = codec.set(out, st.position + 1, t.out_right);
                        next[out].addmul(t.coeff, poly);
                    }
                }
                std::swap(cur, next);
            }
            if (auto it = cur.find(start); it != cur.end()) acc.add_shifted(it->second, 2 * weight);
        }
        partial[chunk] = std::move(acc);
    });
    LaurentPoly total;
    for (const auto& z : partial) total += z.to_laurent();
    return total;
}

LaurentPoly kink_scalar(int n) { return exact_div(LaurentPoly(1L), twist_scalar(n)); }

LaurentPoly colored_jones(const Link& link, std::span<const int> colors) {
    if (colors.size() != link.num_components())
        throw ColorCountMismatch(std::to_string(colors.size()) + " colors for " +
                                 std::to_string(link.num_components()) + " components");
    std::vector<int> position_colors(static_cast<std::size_t>(link.braid().strands));
    for (int p = 0; p < link.braid().strands; ++p)
        position_colors[static_cast<std::size_t>(p)] = colors[static_cast<std::size_t>(link.component_of_position(p))];

    LaurentPoly value = braid_closure_trace(link.braid(), position_colors);
    const std::vector<int> corrections = framing_corrections(link);
    for (std::size_t c = 0; c < corrections.size(); ++c) {
        const int e = corrections[c];
        if (e == 0 || colors[c] == 0) continue;
        const LaurentPoly factor = e > 0 ? kink_scalar(colors[c]) : twist_scalar(colors[c]);
        value *= factor.pow(static_cast<unsigned>(std::abs(e)));
    }
    return value;
}

LaurentPoly JonesEvaluator::evaluate(const std::vector<int>& colors) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(colors); it != cache_.end()) return it->second;
    }
    LaurentPoly value = colored_jones(link_, colors);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(colors, std::move(value)).first->second;
}

LaurentPoly JonesEvaluator::evaluate_multilinear(std::span<const ColorVector> colors) {
    const std::size_t l = link_.num_components();
    if (colors.size() != l)
        throw ColorCountMismatch(std::to_string(colors.size()) + " colors for " + std::to_string(l) + " components");
    for (const auto& c : colors)
        if (c.is_zero()) return {};

    // Odometer over the supports of the color vectors.
    using Iter = std::map<int, LaurentPoly>::const_iterator;
    std::vector<Iter> it(l);
    for (std::size_t i = 0; i < l; ++i) it[i] = colors[i].terms().begin();
    LaurentPoly total;
    std::vector<int> tuple(l);
    while (true) {
        LaurentPoly coeff(1L);
        for (std::size_t i = 0; i < l; ++i) {
            tuple[i] = it[i]->first;
            coeff *= it[i]->second;
        }
        total += coeff * evaluate(tuple);
        std::size_t i = 0;
        for (; i < l; ++i) {
            if (++it[i] != colors[i].terms().end()) break;
            it[i] = colors[i].terms().begin();
        }
        if (i == l) break;
    }
    return total;
}

LaurentPoly colored_jones_multilinear(const Link& link, std::span<const ColorVector> colors) {
    JonesEvaluator eval(link);
    return eval.evaluate_multilinear(colors);
}

}  // namespace sl2inv
