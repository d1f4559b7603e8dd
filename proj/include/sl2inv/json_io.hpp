#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sl2inv/cyclo_number.hpp"
#include "sl2inv/cyclotomic.hpp"
#include "sl2inv/habiro.hpp"
#include "sl2inv/laurent_poly.hpp"
#include "sl2inv/links.hpp"
#include "sl2inv/q_series.hpp"
#include "sl2inv/special.hpp"

namespace sl2inv {

using json = nlohmann::json;

// {"w_exps": [...], "coeffs": ["num/den", ...]}, exponents strictly increasing.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// {"order": N, "residue": [c_0, ...]}
json to_json(const CycloNumber& z);
CycloNumber cyclo_from_json(const json& j);

// {"order": D, "coeffs": [c_0, ...]}
json to_json(const QSeries& s);
QSeries qseries_from_json(const json& j);

// {"level": N, "representative": <LaurentPoly>, "unit_shift": k}
json to_json(const HabiroElement& x);
HabiroElement habiro_from_json(const json& j);

// {"knot": "<braid>", "a": [<LaurentPoly>, ...]}
json to_json(const CyclotomicExpansion& a);
CyclotomicExpansion expansion_from_json(const json& j);

// {"root": N, "coeffs": [<CycloNumber>, ...]}
json to_json(const ZetaSeries& s);

// {"strands": s, "word": [...], "framings": [...]}
json to_json(const Link& link);
Link link_from_json(const json& j);

// Big integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);

// Reads a link from either the text braid format or the JSON form.
// Framings given here (if nonempty) override those in the file.
Link read_link(const std::string& content, const std::vector<int>& framings = {});
Link read_link_file(const std::filesystem::path& path, const std::vector<int>& framings = {});

}  // namespace sl2inv
