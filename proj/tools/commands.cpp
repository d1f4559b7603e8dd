#include "commands.hpp"

#include <iostream>
#include <sstream>

#include "sl2inv/errors.hpp"
#include "sl2inv/habiro.hpp"
#include "sl2inv/jones.hpp"
#include "sl2inv/special.hpp"

namespace sl2inv::cli {

namespace {

// The cache is an optimization: a failed write is reported and otherwise ignored.
void store(const ResultCache& cache, const std::string& key, const json& value) {
    try {
        cache.store(key, value);
    } catch (const std::exception& e) {
        std::cerr << "sl2inv: warning: cache write failed: " << e.what() << "\n";
    }
}

std::string link_key(const Link& link) {
    std::string key = format_braid(link.braid()) + " |framings";
    for (int f : link.target_framings()) key += " " + std::to_string(f);
    return key;
}

int required(const std::optional<int>& v, const char* flag) {
    if (!v) throw InputError(std::string("missing required option ") + flag);
    if (*v < 0) throw RangeError(std::string(flag) + " must be nonnegative");
    return *v;
}

bool is_habiro_json(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || content[first] != '{') return false;
    try {
        return json::parse(content).contains("representative");
    } catch (const json::exception&) {
        return false;
    }
}

// Knots take the fast path through the cyclotomic coefficients; everything
// else goes through the generic grid.
HabiroElement compute_surgery(const Link& link, int level, const ResultCache& cache) {
    const SurgeryLink checked = validate_surgery_input(link);
    if (link.num_components() == 1) {
        const CyclotomicExpansion a = cached_expansion(link.with_framings({0}), level, cache);
        return knot_surgery_invariant(a, link.target_framings().front(), level);
    }
    return surgery_invariant(link, level);
}

void verify_surgery(const Link& link, int level, const HabiroElement& x, const ResultCache& cache) {
    const HabiroElement generic = surgery_invariant(link, level);
    if (generic != x) throw VerificationFailed("generic and cyclotomic surgery paths disagree");
    const HabiroElement higher = compute_surgery(link, level + 1, cache);
    if (!congruent(higher, x)) throw VerificationFailed("surgery invariant is not stable from level " + std::to_string(level));
}

HabiroElement element_for(const std::string& input, const Options& opt, int min_level) {
    if (is_habiro_json(input)) {
        HabiroElement x = habiro_from_json(json::parse(input));
        if (opt.level) x = x.at_level(*opt.level);
        return x;
    }
    const Link link = read_link(input, opt.framings);
    const int level = opt.level ? *opt.level : std::max(1, min_level);
    return cached_surgery(link, level, opt.cache);
}

}  // namespace

CyclotomicExpansion cached_expansion(const Link& knot, int max_index, const ResultCache& cache) {
    const std::string key = "cyclotomic|" + link_key(knot) + "|N=" + std::to_string(max_index);
    if (auto hit = cache.load(key)) return expansion_from_json(*hit);
    CyclotomicExpansion a = a_coefficients(knot, max_index);
    store(cache, key, to_json(a));
    return a;
}

HabiroElement cached_surgery(const Link& link, int level, const ResultCache& cache) {
    const std::string key = "ihs|" + link_key(link) + "|N=" + std::to_string(level);
    if (auto hit = cache.load(key)) return habiro_from_json(*hit);
    HabiroElement x = compute_surgery(link, level, cache);
    store(cache, key, to_json(x));
    return x;
}

Output cmd_jones(const std::string& input, const Options& opt) {
    const Link link = read_link(input, opt.framings);
    std::vector<int> colors = opt.colors;
    if (colors.size() == 1 && link.num_components() > 1) colors.assign(link.num_components(), colors.front());
    const LaurentPoly value = colored_jones(link, colors);
    if (opt.verify && !link.braid().word.empty()) {
        // The same link with a cancelling pair σ_1 σ_1^{-1} appended must agree.
        BraidWord padded = link.braid();
        if (padded.strands >= 2) {
            padded.word.push_back(1);
            padded.word.push_back(-1);
            if (colored_jones(Link(padded, link.target_framings()), colors) != value)
                throw VerificationFailed("value changed under a cancelling crossing pair");
        }
    }
    return {to_json(value), value.to_string() + "\n"};
}

Output cmd_cyclotomic(const std::string& input, const Options& opt) {
    const Link knot = read_link(input, opt.framings);
    const int n_max = required(opt.level, "--level");
    const CyclotomicExpansion a = cached_expansion(knot, n_max, opt.cache);
    if (opt.verify) {
        for (int n = 0; n <= std::min(n_max, 4); ++n)
            if (reconstruct_jones(a, n) != string_knot_jones(knot, n))
                throw VerificationFailed("reconstructed J_K(V_" + std::to_string(n + 1) + ") disagrees with the state sum");
    }
    std::ostringstream tsv;
    tsv << "n\ta_n\n";
    for (std::size_t n = 0; n < a.a.size(); ++n) tsv << n << "\t" << a.a[n].to_string() << "\n";
    return {to_json(a), tsv.str()};
}

Output cmd_kashaev(const std::string& input, const Options& opt) {
    const Link knot = read_link(input, opt.framings);
    const int root = required(opt.root, "--root");
    if (root < 1) throw RangeError("--root must be positive");
    const CyclotomicExpansion a = cached_expansion(knot, root, opt.cache);
    const CycloNumber value = kashaev_value(a, root);
    if (opt.verify) {
        const CyclotomicExpansion longer = cached_expansion(knot, root + 2, opt.cache);
        if (eval_at_root(mm_coefficient(longer, 0, root + 2), root) != value)
            throw VerificationFailed("Kashaev value depends on the truncation");
    }
    return {to_json(value), value.to_string() + "\n"};
}

Output cmd_ihs(const std::string& input, const Options& opt) {
    const Link link = read_link(input, opt.framings);
    const int level = required(opt.level, "--level");
    if (level < 1) throw RangeError("--level must be positive");
    const HabiroElement x = cached_surgery(link, level, opt.cache);
    if (opt.verify) verify_surgery(link, level, x, opt.cache);
    return {to_json(x), "level\t" + std::to_string(x.level()) + "\nrepresentative\t" + x.representative().to_string() + "\n"};
}

Output cmd_wrt(const std::string& input, const Options& opt) {
    const int root = required(opt.root, "--root");
    if (root < 1) throw RangeError("--root must be positive");
    const HabiroElement x = element_for(input, opt, root);
    const CycloNumber value = wrt(x, root);
    if (opt.verify && !is_habiro_json(input)) {
        const Link link = read_link(input, opt.framings);
        if (wrt(cached_surgery(link, x.level() + 1, opt.cache), root) != value)
            throw VerificationFailed("WRT value depends on the level");
    }
    return {to_json(value), value.to_string() + "\n"};
}

Output cmd_ohtsuki(const std::string& input, const Options& opt) {
    const int order = required(opt.order, "--order");
    const HabiroElement x = element_for(input, opt, order);
    const QSeries value = ohtsuki_series(x, static_cast<std::size_t>(order));
    if (opt.verify && !is_habiro_json(input)) {
        const Link link = read_link(input, opt.framings);
        const QSeries higher = ohtsuki_series(cached_surgery(link, x.level() + 1, opt.cache), static_cast<std::size_t>(order));
        if (higher != value) throw VerificationFailed("Ohtsuki series depends on the level");
    }
    std::ostringstream tsv;
    tsv << "k\tc_k\n";
    for (std::size_t k = 0; k < value.order(); ++k) tsv << k << "\t" << value[k].get_str() << "\n";
    return {to_json(value), tsv.str()};
}

}  // namespace sl2inv::cli
