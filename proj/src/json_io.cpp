#include "sl2inv/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "sl2inv/errors.hpp"

namespace sl2inv {

namespace {

template <typename F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const LaurentPoly& p) {
    json exps = json::array();
    json coeffs = json::array();
    for (const auto& [e, c] : p.terms()) {
        exps.push_back(e);
        coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    }
    return {{"w_exps", exps}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const json& j) {
    return parsing("LaurentPoly", [&] {
        const auto& exps = j.at("w_exps");
        const auto& coeffs = j.at("coeffs");
        if (!exps.is_array() || !coeffs.is_array() || exps.size() != coeffs.size())
            throw ParseError("LaurentPoly: w_exps and coeffs must be arrays of equal length");
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const int e = exps[i].get<int>();
            if (i > 0 && e <= terms.back().first) throw ParseError("LaurentPoly: exponents must increase strictly");
            Rational c;
            const std::string text = coeffs[i].is_string() ? coeffs[i].get<std::string>() : coeffs[i].dump();
            if (c.set_str(text, 10) != 0 || c.get_den() == 0) throw ParseError("LaurentPoly: bad coefficient '" + text + "'");
            c.canonicalize();
            terms.emplace_back(e, c);
        }
        return LaurentPoly::from_terms(std::move(terms));
    });
}

json to_json(const CycloNumber& z) {
    json r = json::array();
    for (const auto& c : z.residue()) r.push_back(integer_to_json(c));
    return {{"order", z.order()}, {"residue", r}};
}

CycloNumber cyclo_from_json(const json& j) {
    return parsing("CycloNumber", [&] {
        const int order = j.at("order").get<int>();
        std::vector<Integer> c;
        for (const auto& x : j.at("residue")) c.push_back(integer_from_json(x));
        const std::size_t degree = cyclotomic_polynomial(order).size() - 1;
        if (c.size() != degree) throw ParseError("CycloNumber: residue length must be deg Phi_N");
        return CycloNumber::from_poly(order, std::move(c));
    });
}

json to_json(const QSeries& s) {
    json c = json::array();
    for (const auto& x : s.coeffs()) c.push_back(integer_to_json(x));
    return {{"order", s.order()}, {"coeffs", c}};
}

QSeries qseries_from_json(const json& j) {
    return parsing("QSeries", [&] {
        std::vector<Integer> c;
        for (const auto& x : j.at("coeffs")) c.push_back(integer_from_json(x));
        if (j.contains("order") && j.at("order").get<std::size_t>() != c.size())
            throw ParseError("QSeries: order does not match coefficient count");
        return QSeries(std::move(c));
    });
}

json to_json(const HabiroElement& x) {
    return {{"level", x.level()}, {"representative", to_json(x.representative())}, {"unit_shift", x.unit_shift()}};
}

HabiroElement habiro_from_json(const json& j) {
    return parsing("HabiroElement", [&] {
        const int shift = j.contains("unit_shift") ? j.at("unit_shift").get<int>() : 0;
        return habiro_from_parts(j.at("level").get<int>(), laurent_from_json(j.at("representative")), shift);
    });
}

json to_json(const CyclotomicExpansion& a) {
    json arr = json::array();
    for (const auto& p : a.a) arr.push_back(to_json(p));
    return {{"knot", a.knot_id}, {"a", arr}};
}

CyclotomicExpansion expansion_from_json(const json& j) {
    return parsing("CyclotomicExpansion", [&] {
        CyclotomicExpansion a;
        a.knot_id = j.value("knot", "");
        for (const auto& p : j.at("a")) a.a.push_back(laurent_from_json(p));
        return a;
    });
}

json to_json(const ZetaSeries& s) {
    json c = json::array();
    for (const auto& z : s.coeffs) c.push_back(to_json(z));
    return {{"root", s.root_order}, {"coeffs", c}};
}

json to_json(const Link& link) {
    return {{"strands", link.braid().strands}, {"word", link.braid().word}, {"framings", link.target_framings()}};
}

Link link_from_json(const json& j) {
    return parsing("link", [&] {
        BraidWord b{j.at("strands").get<int>(), j.value("word", std::vector<int>{})};
        validate(b);
        return Link(std::move(b), j.value("framings", std::vector<int>{}));
    });
}

Link read_link(const std::string& content, const std::vector<int>& framings) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const json::exception& e) {
            throw ParseError(std::string("link JSON: ") + e.what());
        }
        Link link = link_from_json(j);
        return framings.empty() ? link : link.with_framings(framings);
    }
    return Link(parse_braid(content), framings);
}

Link read_link_file(const std::filesystem::path& path, const std::vector<int>& framings) {
    return read_link(read_file(path), framings);
}

}  // namespace sl2inv
