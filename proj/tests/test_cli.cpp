#include "qca/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qca;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_tmp_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string read() const {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
};

} // namespace

TEST_CASE("show builtin seeds") {
    const CliResult sl2 = run_cli({"show", "sl2"});
    CHECK(sl2.code == cli::exit_ok);
    CHECK(sl2.out.find("B^T L diagonal: (2)") != std::string::npos);
    CHECK(sl2.out.find("a*") != std::string::npos);
    CHECK(sl2.out.find("a->b") != std::string::npos);

    const CliResult gr = run_cli({"show", "gr25"});
    CHECK(gr.code == cli::exit_ok);
    CHECK(gr.out.find("B^T L diagonal: (2, 2)") != std::string::npos);

    const CliResult machine = run_cli({"show", "uqn12minus", "--format", "machine"});
    CHECK(machine.code == cli::exit_ok);
    const auto j = nlohmann::json::parse(machine.out);
    CHECK(j["diagonal"] == nlohmann::json({2, 2, 2}));
    CHECK(j["names"].size() == 7);
}

TEST_CASE("show validation failures") {
    CHECK(run_cli({"show", "no_such_builtin_or_file"}).code == cli::exit_validation);

    TempFile bad("nonskew.seed");
    bad.write("names: x y\nmutable: 0\nB:\n0\n1\nL:\n0 1\n1 0\n");
    const CliResult r = run_cli({"show", bad.path});
    CHECK(r.code == cli::exit_validation);
    CHECK(r.err.find("skew") != std::string::npos);
}

TEST_CASE("mutate prints relations and expansions") {
    const CliResult sl2 = run_cli({"mutate", "sl2", "0"});
    CHECK(sl2.code == cli::exit_ok);
    CHECK(sl2.out.find("a*a' = 1 + q*b*c") != std::string::npos);
    CHECK(sl2.out.find("a' = q*a^-1*b*c + a^-1") != std::string::npos);

    const CliResult gr = run_cli({"mutate", "gr25", "1"});
    CHECK(gr.code == cli::exit_ok);
    CHECK(gr.out.find("D14*D14' = q^-1*D13*D45 + q*D15*D34") != std::string::npos);

    // Frozen positions are rejected, not ignored.
    const CliResult frozen = run_cli({"mutate", "sl2", "1"});
    CHECK(frozen.code == cli::exit_validation);
    CHECK(frozen.err.find("frozen") != std::string::npos);

    CHECK(run_cli({"mutate", "sl2", "7"}).code == cli::exit_validation);
}

TEST_CASE("mutating twice returns the original seed") {
    const CliResult once = run_cli({"show", "gr25", "--format", "machine"});
    const CliResult twice = run_cli({"mutate", "gr25", "1", "1", "--format", "machine"});
    REQUIRE(twice.code == cli::exit_ok);
    const auto j0 = nlohmann::json::parse(once.out);
    const auto j2 = nlohmann::json::parse(twice.out);
    CHECK(j0["B"] == j2["B"]);
    CHECK(j0["L"] == j2["L"]);
}

TEST_CASE("enumerate reports the graph summary") {
    const CliResult gr = run_cli({"enumerate", "gr25"});
    CHECK(gr.code == cli::exit_ok);
    CHECK(gr.out.find("vertices: 5") != std::string::npos);
    CHECK(gr.out.find("10 directed / 5 undirected") != std::string::npos);
    CHECK(gr.out.find("5 mutable + 5 frozen = 10 total") != std::string::npos);
    CHECK(gr.out.find("type: A2") != std::string::npos);

    const CliResult pj = run_cli({"enumerate", "projective(3)"});
    CHECK(pj.out.find("vertices: 1") != std::string::npos);

    const CliResult machine = run_cli({"enumerate", "uqn12minus", "--format", "machine"});
    const auto j = nlohmann::json::parse(machine.out);
    CHECK(j["vertices"] == 14);
    CHECK(j["undirected_edges"] == 21);
    CHECK(j["type"] == "A3");

    CHECK(run_cli({"enumerate", "uqn12minus", "--max", "5"}).code == cli::exit_bound);
}

TEST_CASE("verify subcommand exit codes") {
    const CliResult ok = run_cli({"verify", "sl2"});
    CHECK(ok.code == cli::exit_ok);
    CHECK(ok.out.find("PASS") != std::string::npos);

    const CliResult gr = run_cli({"verify", "gr25", "--format", "machine"});
    CHECK(gr.code == cli::exit_ok);
    const auto j = nlohmann::json::parse(gr.out);
    CHECK(j["ok"] == true);
    CHECK(j["identities"].size() == 10);

    CHECK(run_cli({"verify", "n2minus"}).code == cli::exit_validation);
    CHECK(run_cli({"verify", "uqn12minus", "--degree-bound", "3"}).code == cli::exit_bound);
}

TEST_CASE("export-dot writes a deterministic file") {
    TempFile dot1("g1.dot"), dot2("g2.dot");
    CHECK(run_cli({"export-dot", "gr25", dot1.path}).code == cli::exit_ok);
    CHECK(run_cli({"export-dot", "gr25", dot2.path}).code == cli::exit_ok);
    const std::string d1 = dot1.read();
    CHECK(d1 == dot2.read());
    CHECK(d1.find("digraph exchange") != std::string::npos);

    TempFile qdot("q.dot");
    CHECK(run_cli({"show", "sl2", "--dot", qdot.path}).code == cli::exit_ok);
    CHECK(qdot.read().find("shape=box") != std::string::npos);
}

TEST_CASE("seed files round-trip through the CLI format") {
    for (const char* name : {"sl2", "gr25", "n2minus", "uqn2minus", "uqn12minus", "projective(3)"}) {
        const QuantumSeed seed = builtin_seed(name).seed;
        const SeedFile reparsed = parse_seed_file(write_seed_file(seed));
        CHECK(reparsed.seed.names == seed.names);
        CHECK(reparsed.seed.B == seed.B);
        CHECK(reparsed.seed.L == seed.L);
        CHECK(reparsed.q_half_exponents);
    }
    // Through the filesystem as well.
    TempFile f("roundtrip.seed");
    CHECK(run_cli({"show", "uqn2minus", "--out", f.path}).code == cli::exit_ok);
    const CliResult reload = run_cli({"show", f.path, "--format", "machine"});
    CHECK(reload.code == cli::exit_ok);
    const auto j = nlohmann::json::parse(reload.out);
    CHECK(j["names"].size() == 6);
    CHECK(j["diagonal"] == nlohmann::json({2, 2}));
}

TEST_CASE("seed file parse errors carry line context") {
    CHECK_THROWS_AS(parse_seed_file("mutable: 0\nL:\n0\n"), validation_error);
    CHECK_THROWS_AS(parse_seed_file("names: x\nmutable: 0\n"), validation_error);
    try {
        parse_seed_file("names: x y\nmutable: 0\nB:\n0\n1\nL:\n0 1 1\n-1 0 0\n");
        FAIL("expected dimension error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("L must be 2x2") != std::string::npos);
    }
    try {
        parse_seed_file("names: x\nwat: 1\nL:\n0\n");
        FAIL("expected line error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::exit_validation);
    CHECK(run_cli({"bogus"}).code == cli::exit_validation);
    CHECK(run_cli({"mutate", "sl2"}).code == cli::exit_validation);
    CHECK(run_cli({"--help"}).code == cli::exit_ok);
}
