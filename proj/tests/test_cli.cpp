// Drives the installed `rio` binary end to end through files and pipes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rio/analysis.hpp"
#include "rio/rio_code.hpp"
#include "rio/wom_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int status = -1;
    std::string output; // stdout and stderr combined
};

CmdResult run_cli(const std::string& args) {
    CmdResult result;
    std::string command = std::string(RIO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;

    TempDir() {
        path = fs::temp_directory_path() /
               ("rio_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int value = 0;
        return value;
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("encode writes the level word file and prints the rate") {
    TempDir dir;
    std::string out = dir.file("levels.txt");
    CmdResult result = run_cli("encode 0x0 --out " + out);
    CHECK(result.status == 0);
    CHECK(result.output == "bits_per_cell=1.3333\n");
    CHECK(slurp(out) == "M=3\n2,0,0\n");
}

TEST_CASE("encode rejects payloads of the wrong width") {
    TempDir dir;
    CmdResult result = run_cli("encode 0x00 --out " + dir.file("levels.txt"));
    CHECK(result.status == 3);
    CHECK_FALSE(fs::exists(dir.file("levels.txt")));
}

TEST_CASE("encode with a missing spec file fails without output") {
    TempDir dir;
    CmdResult result =
        run_cli("encode 0x0 --spec " + dir.file("missing.json") + " --out " + dir.file("l.txt"));
    CHECK(result.status == 5);
    CHECK_FALSE(fs::exists(dir.file("l.txt")));
}

TEST_CASE("encode without --out is a usage error") {
    CmdResult result = run_cli("encode 0x0");
    CHECK(result.status == 2);
}

TEST_CASE("read-chunk prints the subset and its single sense") {
    TempDir dir;
    std::ofstream(dir.file("levels.txt")) << "M=3\n1,0,2\n";
    CmdResult first = run_cli("read-chunk " + dir.file("levels.txt") + " --subset 1");
    CHECK(first.status == 0);
    CHECK(first.output == "10 senses=1\n");

    CmdResult second = run_cli("read-chunk " + dir.file("levels.txt") + " --subset 2");
    CHECK(second.status == 0);
    CHECK(second.output == "01 senses=1\n");

    CmdResult bad = run_cli("read-chunk " + dir.file("levels.txt") + " --subset 3");
    CHECK(bad.status == 3);
}

TEST_CASE("decode prints all payload bits with one sense per subset") {
    TempDir dir;
    std::ofstream(dir.file("levels.txt")) << "M=3\n2,0,0\n";
    CmdResult result = run_cli("decode " + dir.file("levels.txt"));
    CHECK(result.status == 0);
    CHECK(result.output == "0000 0x0 senses=2\n");
}

TEST_CASE("file round-trips match the in-memory codec for every payload") {
    TempDir dir;
    rio::RioCodeSpec spec(rio::toy_code());
    for (std::uint64_t value = 0; value < 16; ++value) {
        rio::Bits payload(4, value);
        std::string out = dir.file("levels.txt");
        std::string hex = rio::payload_to_hex(payload);
        CmdResult encode = run_cli("encode " + hex + " --out " + out);
        REQUIRE(encode.status == 0);
        CHECK(slurp(out) == rio::level_word_to_text(rio::rio_encode(spec, payload)));

        CmdResult decode = run_cli("decode " + out);
        REQUIRE(decode.status == 0);
        CHECK(decode.output == payload.str() + " 0x" + hex + " senses=2\n");
        fs::remove(out);
    }
}

TEST_CASE("identical invocations produce byte-identical output") {
    TempDir dir;
    std::string out1 = dir.file("a.txt");
    std::string out2 = dir.file("b.txt");
    CmdResult a = run_cli("encode 0x6 --out " + out1);
    CmdResult b = run_cli("encode 0x6 --out " + out2);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    CHECK(slurp(out1) == slurp(out2));

    CmdResult analyze1 = run_cli("analyze --writes 3");
    CmdResult analyze2 = run_cli("analyze --writes 3");
    CHECK(analyze1.status == 0);
    CHECK(analyze1.output == analyze2.output);
}

TEST_CASE("analyze emits the published t=2 constants") {
    CmdResult result = run_cli("analyze --writes 2");
    CHECK(result.status == 0);
    CHECK(result.output ==
          "t,optimal_rate,overhead,p_1,p_2,capacity_bits_per_cell,uniform_entropy,shaping_loss\n"
          "2,0.7729,1.2938,0.2271,0.5000,1.5458,1.5850,0.0391\n");

    CmdResult plain = run_cli("analyze --writes 2 --format plain");
    CHECK(plain.status == 0);
    CHECK(plain.output.find("overhead=1.2938") != std::string::npos);
    CHECK(plain.output.find("capacity_bits_per_cell=1.5458") != std::string::npos);
}

TEST_CASE("analyze handles one write and rejects zero") {
    CmdResult one = run_cli("analyze --writes 1");
    CHECK(one.status == 0);
    CHECK(one.output.find("1,1.0000,1.0000,0.5000,1.0000,1.0000,0.0000") != std::string::npos);

    CmdResult zero = run_cli("analyze --writes 0");
    CHECK(zero.status == 2);
}

TEST_CASE("analyze at t=4 prints the library capacity") {
    // The capacity value itself is cross-checked against a grid search in
    // the analysis tests; here the printed row must carry the same number.
    CmdResult result = run_cli("analyze --writes 4");
    CHECK(result.status == 0);
    char expected[32];
    std::snprintf(expected, sizeof expected, ",%.4f,", rio::rio_capacity(4));
    CHECK(result.output.find(expected) != std::string::npos);
}

TEST_CASE("compare prints the cost model") {
    CmdResult m16 = run_cli("compare --levels 16");
    CHECK(m16.status == 0);
    CHECK(m16.output == "scheme,M,reads,total_senses,senses_per_chunk,speedup\n"
                        "interleaved,16,0,0,15.0000,15.0000\n"
                        "non_interleaved,16,0,0,3.7500,3.7500\n"
                        "rio,16,0,0,1.0000,1.0000\n");

    CmdResult m4 = run_cli("compare --levels 4");
    CHECK(m4.status == 0);
    CHECK(m4.output.find("interleaved,4,0,0,3.0000,3.0000\n") != std::string::npos);
    CHECK(m4.output.find("non_interleaved,4,0,0,1.5000,1.5000\n") != std::string::npos);

    CmdResult m3 = run_cli("compare --levels 3");
    CHECK(m3.status == 3);

    CmdResult plain = run_cli("compare --levels 16 --format plain");
    CHECK(plain.status == 0);
    CHECK(plain.output.find("non_interleaved: senses_per_chunk=15/4 rio_speedup=15/4") !=
          std::string::npos);
}

TEST_CASE("synthesize-wom then verify-wom round-trips through a spec file") {
    TempDir dir;
    std::string spec = dir.file("code.json");
    CmdResult synth = run_cli("synthesize-wom 3 2 2 --out " + spec);
    CHECK(synth.status == 0);
    REQUIRE(fs::exists(spec));

    CmdResult verify = run_cli("verify-wom --spec " + spec);
    CHECK(verify.status == 0);
    CHECK(verify.output.find("valid") == 0);

    // The synthesized file also drives the codec.
    std::string out = dir.file("levels.txt");
    CmdResult encode = run_cli("encode 0x5 --spec " + spec + " --out " + out);
    CHECK(encode.status == 0);
    CmdResult decode = run_cli("decode " + out + " --spec " + spec);
    CHECK(decode.status == 0);
    CHECK(decode.output.substr(0, 9) == "0101 0x5 ");
}

TEST_CASE("synthesize-wom distinguishes not-found from guard violations") {
    TempDir dir;
    CmdResult not_found = run_cli("synthesize-wom 2 2 2 --out " + dir.file("none.json"));
    CHECK(not_found.status == 4);
    CHECK_FALSE(fs::exists(dir.file("none.json")));

    CmdResult guard = run_cli("synthesize-wom 5 2 2 --out " + dir.file("guard.json"));
    CHECK(guard.status == 3);
}

TEST_CASE("verify-wom reports violations in a corrupted spec") {
    TempDir dir;
    auto code = rio::synthesize_wom_code(3, 2, 2);
    REQUIRE(code.has_value());
    std::string text = rio::wom_code_to_json(*code);
    // Swap the decode entry for read 000 between "00" and "11".
    std::string needle = "\"decode\": [\n    \"";
    std::size_t pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    pos += needle.size();
    text.replace(pos, 2, text.compare(pos, 2, "00") == 0 ? "11" : "00");
    std::ofstream(dir.file("bad.json")) << text;

    CmdResult verify = run_cli("verify-wom --spec " + dir.file("bad.json"));
    CHECK(verify.status == 3);
    CHECK(verify.output.find("invalid") == 0);
    CHECK(verify.output.find("after writes") != std::string::npos);
}

TEST_CASE("verify-wom maps missing and malformed files to distinct exits") {
    TempDir dir;
    CmdResult missing = run_cli("verify-wom --spec " + dir.file("absent.json"));
    CHECK(missing.status == 5);

    std::ofstream(dir.file("broken.json")) << "{ not json";
    CmdResult malformed = run_cli("verify-wom --spec " + dir.file("broken.json"));
    CHECK(malformed.status == 3);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("encode").status == 2);
    CHECK(run_cli("read-chunk missing-levels").status == 2); // --subset required
}

TEST_CASE("help text documents the payload hex convention") {
    CmdResult help = run_cli("encode --help");
    CHECK(help.status == 0);
    CHECK(help.output.find("hex digits") != std::string::npos);
    CHECK(help.output.find("most") != std::string::npos);
}
