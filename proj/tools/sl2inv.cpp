#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sl2inv/errors.hpp"
#include "sl2inv/parallel.hpp"

namespace {

using namespace sl2inv;
using Command = cli::Output (*)(const std::string&, const cli::Options&);

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Result {
    cli::Output output;
    int exit_code = 0;
    std::string error;
};

Result run_one(Command cmd, const std::string& path, const cli::Options& opt) {
    try {
        return {cmd(slurp(path), opt), 0, {}};
    } catch (const Error& e) {
        return {{}, e.exit_code(), e.what()};
    } catch (const std::exception& e) {
        return {{}, 4, e.what()};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum sl2 invariants of links and integral homology spheres"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 0;
    cli::Options opt;

    struct Subcommand {
        const char* name;
        const char* help;
        Command cmd;
    };
    const Subcommand subcommands[] = {
        {"jones", "Colored Jones polynomial of a link", cli::cmd_jones},
        {"cyclotomic", "Cyclotomic coefficients a_0..a_N of a knot", cli::cmd_cyclotomic},
        {"kashaev", "Kashaev invariant of a knot at a root of unity", cli::cmd_kashaev},
        {"ihs", "Universal invariant of surgery on an algebraically split link", cli::cmd_ihs},
        {"wrt", "WRT invariant at a root of unity", cli::cmd_wrt},
        {"ohtsuki", "Ohtsuki series to a given order", cli::cmd_ohtsuki},
    };
    Command selected = nullptr;
    for (const Subcommand& s : subcommands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("inputs", inputs, "Input files ('-' for stdin)")->required();
        sub->add_option("-N,--level", opt.level, "Truncation level / maximal index");
        sub->add_option("--root", opt.root, "Order of the root of unity");
        sub->add_option("--order", opt.order, "Order of the Ohtsuki series");
        sub->add_option("--colors", opt.colors, "Colors n_i (component i gets V_{n_i+1})")->delimiter(',')->allow_extra_args(false);
        sub->add_option("--framings", opt.framings, "Target framings, overriding the input file")->delimiter(',')->allow_extra_args(false);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--cache-dir", cache_dir, "Result cache directory");
        sub->add_flag("--no-cache", no_cache, "Disable the result cache");
        sub->add_flag("--verify", opt.verify, "Run two-path and stability cross-checks");
        sub->add_option("-j,--threads", threads, "Worker threads (default: hardware concurrency)");
        sub->callback([&selected, cmd = s.cmd] { selected = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) set_worker_count(static_cast<unsigned>(threads));
    if (!no_cache) opt.cache = ResultCache(cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(cache_dir));

    std::vector<Result> results(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) { results[i] = run_one(selected, inputs[i], opt); });

    int exit_code = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (results[i].exit_code != 0) {
            std::cerr << "sl2inv: " << inputs[i] << ": " << results[i].error << "\n";
            exit_code = std::max(exit_code, results[i].exit_code);
        }
    }

    if (format == "tsv") {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (results[i].exit_code != 0) continue;
            if (inputs.size() > 1) std::cout << "# " << inputs[i] << "\n";
            std::cout << results[i].output.tsv;
        }
    } else if (inputs.size() == 1) {
        if (exit_code == 0) std::cout << results[0].output.value.dump() << "\n";
    } else {
        json out = json::array();
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            json entry = {{"input", inputs[i]}};
            if (results[i].exit_code == 0)
                entry["result"] = results[i].output.value;
            else
                entry["error"] = {{"exit_code", results[i].exit_code}, {"message", results[i].error}};
            out.push_back(std::move(entry));
        }
        std::cout << out.dump() << "\n";
    }
    return exit_code;
}
