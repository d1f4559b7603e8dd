#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2inv/json_io.hpp"
#include "sl2inv/result_cache.hpp"

namespace sl2inv::cli {

struct Options {
    std::vector<int> colors;
    std::vector<int> framings;
    std::optional<int> level;
    std::optional<int> root;
    std::optional<int> order;
    bool verify = false;
    ResultCache cache;
};

// One evaluated input: the JSON value printed on stdout plus a TSV rendering.
struct Output {
    json value;
    std::string tsv;
};

Output cmd_jones(const std::string& input, const Options& opt);
Output cmd_cyclotomic(const std::string& input, const Options& opt);
Output cmd_kashaev(const std::string& input, const Options& opt);
Output cmd_ihs(const std::string& input, const Options& opt);
Output cmd_wrt(const std::string& input, const Options& opt);
Output cmd_ohtsuki(const std::string& input, const Options& opt);

// Inputs are file contents, not paths.
CyclotomicExpansion cached_expansion(const Link& knot, int max_index, const ResultCache& cache);
HabiroElement cached_surgery(const Link& link, int level, const ResultCache& cache);

}  // namespace sl2inv::cli
