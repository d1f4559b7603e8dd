#include "sl2inv/links.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sl2inv/errors.hpp"

namespace sl2inv {

namespace {

int parse_int(std::string_view token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("bad integer token '" + std::string(token) + "'");
    return value;
}

// perm[p] = top position reached by the strand that starts at bottom position p.
std::vector<int> braid_permutation(const BraidWord& b) {
    std::vector<int> at(static_cast<std::size_t>(b.strands));  // at[pos] = starting position of strand now at pos
    std::iota(at.begin(), at.end(), 0);
    for (int g : b.word) {
        const auto i = static_cast<std::size_t>(std::abs(g) - 1);
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(at.size());
    for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
    return perm;
}

}  // namespace

void validate(const BraidWord& b) {
    if (b.strands < 0) throw RangeError("negative strand count");
    for (int g : b.word)
        if (g == 0 || std::abs(g) >= b.strands)
            throw RangeError("letter " + std::to_string(g) + " on " + std::to_string(b.strands) + " strands");
}

BraidWord parse_braid(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string token;
    if (!(in >> token)) throw ParseError("empty braid description");
    constexpr std::string_view header = "strands:";
    if (token.rfind(header, 0) != 0) throw ParseError("expected 'strands:<s>' header, got '" + token + "'");
    BraidWord b;
    std::string_view count(token);
    count.remove_prefix(header.size());
    if (count.empty()) {
        // Allow "strands: 3".
        if (!(in >> token)) throw ParseError("missing strand count");
        count = token;
        b.strands = parse_int(count);
    } else {
        b.strands = parse_int(count);
    }
    while (in >> token) b.word.push_back(parse_int(token));
    validate(b);
    return b;
}

std::string format_braid(const BraidWord& b) {
    std::string s = "strands:" + std::to_string(b.strands);
    for (int g : b.word) s += " " + std::to_string(g);
    return s;
}

BraidWord mirror(const BraidWord& b) {
    BraidWord m = b;
    for (int& g : m.word) g = -g;
    return m;
}

std::vector<std::vector<int>> components(const BraidWord& b) {
    validate(b);
    const std::vector<int> perm = braid_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    std::vector<std::vector<int>> cycles;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(perm[p])) {
            seen[p] = true;
            cycle.push_back(static_cast<int>(p));
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

Link::Link(BraidWord braid, std::vector<int> target_framings)
    : braid_(std::move(braid)), components_(sl2inv::components(braid_)), framings_(std::move(target_framings)) {
    position_component_.assign(static_cast<std::size_t>(braid_.strands), -1);
    for (std::size_t c = 0; c < components_.size(); ++c)
        for (int p : components_[c]) position_component_[static_cast<std::size_t>(p)] = static_cast<int>(c);
    if (framings_.empty()) framings_.assign(components_.size(), 0);
    if (framings_.size() != components_.size())
        throw ColorCountMismatch(std::to_string(framings_.size()) + " framings for " +
                                 std::to_string(components_.size()) + " components");
}

std::vector<CrossingInfo> crossing_components(const Link& link) {
    const BraidWord& b = link.braid();
    std::vector<int> comp(static_cast<std::size_t>(b.strands));
    for (int p = 0; p < b.strands; ++p) comp[static_cast<std::size_t>(p)] = link.component_of_position(p);
    std::vector<CrossingInfo> out;
    out.reserve(b.word.size());
    for (int g : b.word) {
        const auto i = static_cast<std::size_t>(std::abs(g) - 1);
        out.push_back({g > 0 ? 1 : -1, comp[i], comp[i + 1]});
        std::swap(comp[i], comp[i + 1]);
    }
    return out;
}

LinkingMatrix linking_data(const Link& link) {
    const std::size_t l = link.num_components();
    std::vector<int> twice(l * l, 0);
    LinkingMatrix m{l, std::vector<int>(l * l, 0)};
    for (const auto& c : crossing_components(link)) {
        const auto a = static_cast<std::size_t>(c.left_component);
        const auto b = static_cast<std::size_t>(c.right_component);
        if (a == b) {
            m.entries[a * l + a] += c.sign;
        } else {
            twice[a * l + b] += c.sign;
            twice[b * l + a] += c.sign;
        }
    }
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            if (i == j) continue;
            if (twice[i * l + j] % 2 != 0) throw InternalError("odd inter-component crossing count");
            m.entries[i * l + j] = twice[i * l + j] / 2;
        }
    return m;
}

std::vector<int> framing_corrections(const Link& link) {
    const LinkingMatrix lk = linking_data(link);
    std::vector<int> out;
    for (std::size_t i = 0; i < link.num_components(); ++i)
        out.push_back(link.target_framings()[i] - lk.writhe(i));
    return out;
}

SurgeryLink validate_surgery_input(const Link& link) {
    const LinkingMatrix lk = linking_data(link);
    const std::size_t l = link.num_components();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            if (lk(i, j) != 0)
                throw NotAlgebraicallySplit("lk(" + std::to_string(i) + ", " + std::to_string(j) +
                                            ") = " + std::to_string(lk(i, j)));
    for (std::size_t i = 0; i < l; ++i) {
        const int f = link.target_framings()[i];
        if (f != 1 && f != -1)
            throw BadFraming("component " + std::to_string(i) + " has framing " + std::to_string(f));
    }
    return {link, framing_corrections(link)};
}

}  // namespace sl2inv
