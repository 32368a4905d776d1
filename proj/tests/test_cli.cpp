// End-to-end tests of the command-line tool. The binary path arrives via the
// HYPERGAMES_BIN environment variable set by the build.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* p = std::getenv("HYPERGAMES_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exitCode;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string outFile = "cli_out.tmp";
    std::string cmd = bin() + " " + args + " > " + outFile + " 2> cli_err.tmp";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WEXITSTATUS(rc);
    std::ifstream in(outFile, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    r.out = os.str();
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kG1 = R"({"nodes":["s","v1","v2"],
 "arcs":[{"tail":"s","head":"v1","label":"a"},
         {"tail":"v1","head":"v2","label":"b"},
         {"tail":"v2","head":"v1","label":"c"}],
 "start":"s"})";

const char* kG2 = R"({"nodes":["s","v1","v2","v3"],
 "arcs":[{"tail":"s","head":"v1","label":"a"},
         {"tail":"v1","head":"v2","label":"b"},
         {"tail":"v2","head":"v3","label":"c"},
         {"tail":"v3","head":"v2","label":"d"}],
 "start":"s"})";

// start has out-degree 2: rejected by structural validation
const char* kBroken = R"({"nodes":["s","v1","v2"],
 "arcs":[{"tail":"s","head":"v1","label":"a"},
         {"tail":"s","head":"v2","label":"b"},
         {"tail":"v2","head":"v1","label":"c"}],
 "start":"s"})";

}  // namespace

TEST_CASE("cli: validate") {
    write_file("g1.json", kG1);
    auto ok = run("validate -i g1.json");
    CHECK(ok.exitCode == 0);
    CHECK(ok.out.find("\"valid\": true") != std::string::npos);
    CHECK(ok.out.find("\"M21\"") != std::string::npos);

    write_file("broken.json", kBroken);
    CHECK(run("validate -i broken.json").exitCode == 2);
    CHECK(run("validate -i no_such_file.json").exitCode == 2);
    write_file("garbage.json", "{not json");
    CHECK(run("validate -i garbage.json").exitCode == 2);
}

TEST_CASE("cli: solve-geo") {
    write_file("g1.json", kG1);
    write_file("g2.json", kG2);
    auto a = run("solve-geo -i g1.json");
    CHECK(a.exitCode == 0);
    CHECK(a.out.find("\"winner\": \"Alice\"") != std::string::npos);
    auto b = run("solve-geo -i g2.json");
    CHECK(b.exitCode == 0);
    CHECK(b.out.find("\"winner\": \"Bob\"") != std::string::npos);
}

TEST_CASE("cli: reduce artifacts and byte stability") {
    write_file("g1.json", kG1);
    CHECK(run("reduce -i g1.json --variant rank4 -o red_a.json --meta meta_a.json "
              "--dot geo_a.dot")
              .exitCode == 0);
    CHECK(run("reduce -i g1.json --variant rank4 -o red_b.json").exitCode == 0);
    std::string a = read_file("red_a.json");
    CHECK(a == read_file("red_b.json"));
    CHECK(a.find("\"vertices\"") != std::string::npos);
    CHECK(read_file("meta_a.json").find("\"variant\": \"rank4\"") != std::string::npos);
    CHECK(read_file("geo_a.dot").find("digraph") != std::string::npos);

    // stdout emission matches the file artifact byte for byte
    auto piped = run("reduce -i g1.json --variant rank4");
    CHECK(piped.out == a);

    CHECK(run("reduce -i g1.json --variant mm-uniform -o red_mm.json").exitCode == 0);
    CHECK(run("reduce -i g1.json --variant bogus -o x.json").exitCode != 0);
}

TEST_CASE("cli: solve conventions, budgets and exit codes") {
    write_file("g1.json", kG1);
    REQUIRE(run("reduce -i g1.json --variant rank4 -o red1.json").exitCode == 0);

    auto mb = run("solve -i red1.json --convention mb");
    CHECK(mb.exitCode == 0);
    CHECK(mb.out.find("\"outcome\": \"MakerWin\"") != std::string::npos);

    auto mm = run("solve -i red1.json --convention mm");
    CHECK(mm.exitCode == 0);
    CHECK(mm.out.find("\"outcome\": \"FPWin\"") != std::string::npos);

    // deterministic: repeated runs agree byte for byte
    CHECK(run("solve -i red1.json --convention mb").out == mb.out);

    CHECK(run("solve -i red1.json --convention mb --budget 10").exitCode == 3);
    CHECK(run("solve -i no_such_file.json --convention mb").exitCode == 2);
}

TEST_CASE("cli: pair") {
    write_file("g1.json", kG1);
    write_file("g2.json", kG2);
    REQUIRE(run("reduce -i g1.json --variant rank4 -o red1.json").exitCode == 0);
    REQUIRE(run("reduce -i g2.json --variant rank4 -o red2.json").exitCode == 0);

    // Maker-win board: a complete search proves no pairing exists
    auto none = run("pair -i red1.json");
    CHECK(none.exitCode == 1);
    CHECK(none.out.find("\"found\": false") != std::string::npos);
    CHECK(none.out.find("\"complete\": true") != std::string::npos);

    // paired toy board
    write_file("paired.json",
               R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["c","d"]]})");
    auto found = run("pair -i paired.json");
    CHECK(found.exitCode == 0);
    CHECK(found.out.find("\"found\": true") != std::string::npos);
}

TEST_CASE("cli: verify suites") {
    write_file("g1.json", kG1);
    write_file("g2.json", kG2);

    auto gadgets = run("verify --suite gadgets");
    CHECK(gadgets.exitCode == 0);
    CHECK(gadgets.out.find("\"pass\": true") != std::string::npos);

    auto g1 = run("verify -i g1.json --suite all");
    CHECK(g1.exitCode == 0);
    CHECK(g1.out.find("\"pass\": true") != std::string::npos);
    CHECK(g1.out.find("mb-strategy/maker") != std::string::npos);
    CHECK(g1.out.find("\"Alice vs MakerWin\"") != std::string::npos);

    auto g2 = run("verify -i g2.json --suite mb");
    CHECK(g2.exitCode == 0);
    CHECK(g2.out.find("mb-strategy/breaker") != std::string::npos);

    CHECK(run("verify -i g1.json --suite bogus").exitCode != 0);
    CHECK(run("verify --suite mb").exitCode == 2);  // missing input
}
