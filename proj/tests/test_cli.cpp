#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

// Runs the CLI binary (path injected by the build) with the given
// argument string, capturing combined output.
RunResult run(const std::string& args) {
    std::string command = std::string(KODIM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const char* name, const std::string& content) {
    std::string path = std::string("cli_test_") + name + ".cat";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
    out.close();
    return path;
}

}  // namespace

TEST_CASE("kappa command snapshots") {
    RunResult r = run("kappa H5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "5/2 (A3)\n");

    r = run("kappa H3xR");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3/2 (A4) via H3 | R\n");

    r = run("kappa point");
    CHECK(r.output == "0 (A0)\n");

    r = run("kappa S5");
    CHECK(r.output == "-inf (A1)\n");

    r = run("kappa Sol3xR2");  // alias resolution
    CHECK(r.output == "0 (A2)\n");

    r = run("--format json kappa SL2t");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"geometry\": \"SL2t\"") != std::string::npos);
    CHECK(r.output.find("\"kappa\": \"1\"") != std::string::npos);
    CHECK(r.output.find("\"axiom\": \"A4\"") != std::string::npos);
    CHECK(r.output.find("\"witness\"") != std::string::npos);
}

TEST_CASE("table command snapshot for dimension 3") {
    RunResult r = run("table --dim 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "kappa -inf: S2xR, S3\n"
          "kappa 0: Nil3, R3, Sol3\n"
          "kappa 1: H2xR, SL2t\n"
          "kappa 3/2: H3\n");
}

TEST_CASE("volume command snapshots") {
    RunResult r = run("volume H5");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "positive\n"
          "  P1: modeled on an irreducible symmetric space of non-compact type\n");

    r = run("volume S2xH3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "zero\n"
          "  Z1: decomposition S2 | H3 involves a compact model\n"
          "  Z4: product factor S2 has vanishing simplicial volume\n");
}

TEST_CASE("order command snapshots") {
    RunResult r = run("order H2xR3 H5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "forbidden (kappa: 1 < 5/2; volume: 0 vs positive)\n");

    r = run("order H5 H2xR3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "not forbidden\n");
}

TEST_CASE("bundle command snapshots") {
    RunResult r = run("bundle surface:2 surface:3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");

    r = run("bundle circle 3m:[h3]");
    CHECK(r.output == "3/2\n");

    r = run("bundle circle 3m:[]");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("warning:") != std::string::npos);
    CHECK(r.output.find("0\n") != std::string::npos);

    r = run("--format json bundle surface:2 surface:3");
    CHECK(r.output.find("\"kappa\": \"2\"") != std::string::npos);
    CHECK(r.output.find("\"volume_positive\": true") != std::string::npos);
}

TEST_CASE("preorder command emits text, json and dot") {
    RunResult r = run("preorder --dim 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "kappa -inf: S2\n"
          "kappa 0: R2\n"
          "kappa 1: H2\n");

    r = run("preorder --dim 2 --json");
    CHECK(r.output.find("\"levels\"") != std::string::npos);

    r = run("preorder --dim 2 --dot");
    CHECK(r.output.find("digraph preorder_dim2") != std::string::npos);
    CHECK(r.output.find("ltail=cluster_0") != std::string::npos);
}

TEST_CASE("catalog subcommands") {
    RunResult r = run("catalog export");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("name: H3xR\n") != std::string::npos);

    // Exported text validates and reproduces the same table.
    std::string exported = write_temp("export", r.output);
    r = run("catalog validate " + exported);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "ok: 90 records\n");
    r = run("--catalog " + exported + " kappa H5");
    CHECK(r.output == "5/2 (A3)\n");

    // A dimension-6 extension loads over the builtin.
    std::string ext = write_temp(
        "ext6", "name: H3xH3\ndim: 6\nclass: fibered\nfib: H3 | H3 # product\n");
    r = run("catalog load " + ext);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "ok: 91 records (1 added, max dim 6)\n");
    r = run("--extend " + ext + " kappa H3xH3");
    CHECK(r.output == "3 (A4) via H3 | H3\n");

    // Broken files report diagnostics and exit 3.
    std::string bad = write_temp("bad", "name: X\ndim: 3\nclass: fibered\nfib: A | B\n");
    r = run("catalog validate " + bad);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("dangling decomposition reference") != std::string::npos);
    r = run("catalog load " + bad);
    CHECK(r.exit_code == 3);

    std::remove(exported.c_str());
    std::remove(ext.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("error handling and exit codes") {
    RunResult r = run("kappa H6");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown geometry 'H6'") != std::string::npos);
    CHECK(r.output.find("did you mean") != std::string::npos);

    r = run("volume F4");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no compact representative") != std::string::npos);

    r = run("order H2 H3");
    CHECK(r.exit_code == 2);

    r = run("bundle surface:2 circle");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("dimension") != std::string::npos);

    r = run("bundle nonsense circle");
    CHECK(r.exit_code == 2);

    r = run("table --dim 9");
    CHECK(r.exit_code == 2);

    r = run("--catalog /nonexistent/path.cat kappa H2");
    CHECK(r.exit_code == 2);

    r = run("frobnicate");
    CHECK(r.exit_code == 2);

    // Inconsistent volume rules exit with their own code.
    std::string weird = write_temp(
        "weird",
        "name: WeirdProduct\ndim: 5\nclass: fibered\n"
        "fib: H3 | H2 # product\n"
        "fib: S3 | H2 # alternative presentation with a compact fiber\n");
    r = run("--extend " + weird + " volume WeirdProduct");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("volume rules conflict") != std::string::npos);
    std::remove(weird.c_str());
}

TEST_CASE("help is available") {
    RunResult r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("kappa") != std::string::npos);
    CHECK(r.output.find("preorder") != std::string::npos);
}
