#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "commands.hpp"
#include "sl2inv/errors.hpp"
#include "sl2inv/q_numbers.hpp"
#include "support.hpp"

using namespace sl2inv;
using namespace sl2inv::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

struct ScratchDir {
    fs::path path = fs::temp_directory_path() / ("sl2inv-cli-test-" + std::to_string(::getpid()));
    ScratchDir() {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~ScratchDir() { fs::remove_all(path); }
};

const fs::path& workdir() {
    static const ScratchDir dir;
    return dir.path;
}

fs::path write(const std::string& name, const std::string& content) {
    const fs::path p = workdir() / name;
    std::ofstream(p) << content;
    return p;
}

// Runs the built executable; stderr is discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(SL2INV_TOOL) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

cli::Options options() {
    cli::Options opt;
    return opt;
}

}  // namespace

TEST_CASE("command functions") {
    cli::Options opt = options();
    opt.colors = {1};
    CHECK(laurent_from_json(cli::cmd_jones("strands:1", opt).value) == quantum_int(2));

    opt = options();
    opt.level = 3;
    const auto table = cli::cmd_cyclotomic("strands:3 1 -2 1 -2", opt);
    CHECK(expansion_from_json(table.value).a == std::vector<LaurentPoly>(4, LaurentPoly(1L)));
    CHECK(table.tsv == "n\ta_n\n0\t1\n1\t1\n2\t1\n3\t1\n");

    opt = options();
    opt.root = 3;
    opt.verify = true;
    CHECK(cyclo_from_json(cli::cmd_kashaev("strands:3 1 -2 1 -2", opt).value) == CycloNumber(3, 13));

    opt = options();
    opt.level = 4;
    opt.verify = true;
    opt.framings = {-1};
    const HabiroElement poincare = habiro_from_json(cli::cmd_ihs("strands:2 -1 -1 -1", opt).value);
    CHECK(poincare == surgery_invariant(knot("strands:2 -1 -1 -1", -1), 4));

    // wrt/ohtsuki accept a serialized element as input.
    const std::string element = to_json(poincare).dump();
    opt = options();
    opt.order = 4;
    CHECK(qseries_from_json(cli::cmd_ohtsuki(element, opt).value) == QSeries({1, -6, 45, -464}));
    opt = options();
    opt.root = 2;
    CHECK(cyclo_from_json(cli::cmd_wrt(element, opt).value) == CycloNumber(2, 1));

    opt = options();
    opt.order = 2;
    opt.verify = true;
    opt.framings = {1};
    CHECK(qseries_from_json(cli::cmd_ohtsuki("strands:1", opt).value) == QSeries({1, 0}));
    opt.framings = {};
    CHECK(qseries_from_json(cli::cmd_ohtsuki("strands:0", opt).value) == QSeries({1, 0}));

    opt = options();
    CHECK_THROWS_AS(cli::cmd_cyclotomic("strands:1", opt), InputError);
    opt.level = -1;
    CHECK_THROWS_AS(cli::cmd_ihs("strands:1", opt), RangeError);
}

TEST_CASE("cached and recomputed results are identical") {
    cli::Options opt = options();
    opt.cache = ResultCache(workdir() / "cache");
    opt.level = 4;
    const std::string fresh = cli::cmd_cyclotomic("strands:2 1 1 1", opt).value.dump();
    REQUIRE(opt.cache.load("cyclotomic|strands:2 1 1 1 |framings 0|N=4").has_value());
    const std::string cached = cli::cmd_cyclotomic("strands:2 1 1 1", opt).value.dump();
    CHECK(fresh == cached);
    cli::Options plain = options();
    plain.level = 4;
    CHECK(fresh == cli::cmd_cyclotomic("strands:2 1 1 1", plain).value.dump());

    opt.framings = {1};
    const std::string ihs = cli::cmd_ihs("strands:2 1 1 1", opt).value.dump();
    CHECK(ihs == cli::cmd_ihs("strands:2 1 1 1", opt).value.dump());
    cli::Options uncached = options();
    uncached.level = 4;
    uncached.framings = {1};
    CHECK(ihs == cli::cmd_ihs("strands:2 1 1 1", uncached).value.dump());
}

TEST_CASE("executable: outputs") {
    const fs::path unknot = write("unknot.txt", "strands:1\n");
    const fs::path trefoil = write("trefoil.txt", "strands:2 -1 -1 -1\n");
    const fs::path fig8 = write("fig8.json", R"({"strands":3,"word":[1,-2,1,-2]})");
    const std::string nocache = " --no-cache";

    Run r = run("jones " + unknot.string() + " --colors 1" + nocache);
    CHECK(r.code == 0);
    CHECK(laurent_from_json(json::parse(r.out)) == quantum_int(2));

    r = run("cyclotomic -N 3 --format tsv " + trefoil.string() + nocache);
    CHECK(r.code == 0);
    CHECK(r.out == "n\ta_n\n0\t1\n1\t-q^2\n2\tq^5\n3\t-q^9\n");

    // Several inputs give an array of {input, result}.
    r = run("cyclotomic -N 2 " + trefoil.string() + " " + fig8.string() + nocache);
    CHECK(r.code == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[1]["input"] == fig8.string());
    CHECK(expansion_from_json(arr[1]["result"]).a == std::vector<LaurentPoly>(3, LaurentPoly(1L)));

    r = run("ihs -N 3 --framings 1 --verify " + unknot.string() + nocache);
    CHECK(r.code == 0);
    CHECK(habiro_from_json(json::parse(r.out)) == habiro_reduce(LaurentPoly(1L), 3));

    const fs::path element = write("element.json", to_json(surgery_invariant(knot("strands:2 -1 -1 -1", -1), 5)).dump());
    r = run("ohtsuki --order 5 " + element.string());
    CHECK(r.code == 0);
    CHECK(qseries_from_json(json::parse(r.out)) == QSeries({1, -6, 45, -464, 6224}));

    r = run("wrt --root 5 --framings -1 --verify " + trefoil.string() + " --cache-dir " + (workdir() / "c2").string());
    CHECK(r.code == 0);
    CHECK(cyclo_from_json(json::parse(r.out)) == wrt(surgery_invariant(knot("strands:2 -1 -1 -1", -1), 5), 5));
    CHECK(fs::exists(workdir() / "c2"));

    r = run("kashaev --root 3 - < " + fig8.string() + nocache);
    CHECK(r.code == 0);
    CHECK(cyclo_from_json(json::parse(r.out)) == CycloNumber(3, 13));
}

TEST_CASE("executable: exit codes") {
    const fs::path bad = write("bad.txt", "strands:2 5\n");
    const fs::path garbage = write("garbage.txt", "hello\n");
    const fs::path hopf = write("hopf.txt", "strands:2 1 1\n");
    const fs::path trefoil = write("trefoil.txt", "strands:2 -1 -1 -1\n");
    const fs::path element = write("element.json", to_json(habiro_reduce(LaurentPoly(1L), 3)).dump());
    const fs::path fractional = write("fractional.json", R"({"level":3,"representative":{"w_exps":[0],"coeffs":["1/2"]}})");

    CHECK(run("jones " + garbage.string()).code == 2);
    CHECK(run("jones " + bad.string()).code == 2);
    CHECK(run("jones /nonexistent/file").code == 2);
    CHECK(run("jones").code == 2);
    CHECK(run("frobnicate x").code == 2);
    CHECK(run("ihs -N 2 --framings 1,1 " + hopf.string() + " --no-cache").code == 2);
    CHECK(run("ihs -N 2 " + trefoil.string() + " --no-cache").code == 2);  // framing 0
    CHECK(run("ohtsuki --order 4 " + element.string()).code == 2);
    CHECK(run("wrt --root 4 " + element.string()).code == 2);
    CHECK(run("jones --format xml " + trefoil.string()).code == 2);
    CHECK(run("wrt --root 2 " + fractional.string()).code == 3);
    CHECK(run("--help").code == 0);
    // One failing input in a batch: the others still print, and the worst code wins.
    const Run r = run("cyclotomic -N 1 " + trefoil.string() + " " + garbage.string() + " --no-cache");
    CHECK(r.code == 2);
    const json arr = json::parse(r.out);
    CHECK(arr[0].contains("result"));
    CHECK(arr[1]["error"]["exit_code"] == 2);
}
