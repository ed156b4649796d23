// rio — RIO coding command line tool.
//
// Encodes payloads onto multi-level wordlines so that each k-bit chunk is
// readable with a single threshold sense, inspects and synthesizes the
// underlying write-once-memory codes, and prints the read-cost and
// asymptotic-efficiency reports.
//
// Exit codes: 0 success, 2 usage error, 3 domain/dimension error,
// 4 no code exists, 5 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rio/analysis.hpp"
#include "rio/errors.hpp"
#include "rio/flash_sim.hpp"
#include "rio/rio_code.hpp"
#include "rio/wom_code.hpp"
#include "rio/wom_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNotFound = 4;
constexpr int kExitIo = 5;

std::string fixed4(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw rio::IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw rio::IoError("failed to read '" + path + "'");
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw rio::IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush())
        throw rio::IoError("failed to write '" + path + "'");
}

rio::RioCodeSpec load_spec(const std::string& spec_path) {
    if (spec_path.empty())
        return rio::RioCodeSpec(rio::toy_code());
    return rio::RioCodeSpec(rio::load_wom_code(spec_path));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

struct Options {
    std::string spec_path;
    std::string out_path;
    std::string input;
    std::string format = "csv";
    int subset = 1;
    int level_count = 4;
    int writes = 2;
    int synth_n = 3, synth_k = 2, synth_t = 2;
};

int cmd_encode(const Options& opt) {
    rio::RioCodeSpec spec = load_spec(opt.spec_path);
    rio::Bits payload = rio::payload_from_hex(opt.input, spec.payload_bits());
    rio::LevelWord word = rio::rio_encode(spec, payload);
    write_file(opt.out_path, rio::level_word_to_text(word));
    std::cout << "bits_per_cell=" << fixed4(rio::bits_per_cell(spec).to_double()) << "\n";
    return 0;
}

int cmd_decode(const Options& opt) {
    rio::RioCodeSpec spec = load_spec(opt.spec_path);
    rio::LevelWord word = rio::level_word_from_text(read_file(opt.input));
    rio::SimWordline wordline;
    wordline.program(word);
    rio::Bits payload = rio::read_chunk_counted(spec, wordline, 1);
    for (int j = 2; j <= spec.subsets(); ++j)
        payload = rio::Bits::concat(payload, rio::read_chunk_counted(spec, wordline, j));
    std::cout << payload.str() << " 0x" << rio::payload_to_hex(payload)
              << " senses=" << wordline.sense_count() << "\n";
    return 0;
}

int cmd_read_chunk(const Options& opt) {
    rio::RioCodeSpec spec = load_spec(opt.spec_path);
    rio::LevelWord word = rio::level_word_from_text(read_file(opt.input));
    rio::SimWordline wordline;
    wordline.program(word);
    rio::Bits chunk = rio::read_chunk_counted(spec, wordline, opt.subset);
    std::cout << chunk.str() << " senses=" << wordline.sense_count() << "\n";
    return 0;
}

int cmd_analyze(const Options& opt) {
    rio::AnalysisRow row = rio::analyze_writes(opt.writes);
    if (opt.format == "csv") {
        emit(opt.out_path, rio::analysis_csv(row));
        return 0;
    }
    std::string text;
    text += "t=" + std::to_string(row.writes) + "\n";
    text += "optimal_rate=" + fixed4(row.optimal_rate) + "\n";
    text += "overhead=" + fixed4(row.overhead) + "\n";
    for (int j = 1; j <= row.writes; ++j)
        text += "p_" + std::to_string(j) + "=" +
                fixed4(row.fractions[static_cast<std::size_t>(j - 1)]) + "\n";
    text += "capacity_bits_per_cell=" + fixed4(row.capacity_bits_per_cell) + "\n";
    text += "uniform_entropy=" + fixed4(row.uniform_entropy) + "\n";
    text += "shaping_loss=" + fixed4(row.shaping_loss) + "\n";
    emit(opt.out_path, text);
    return 0;
}

int cmd_compare(const Options& opt) {
    if (opt.format == "csv") {
        emit(opt.out_path, rio::compare_schemes_csv(opt.level_count));
        return 0;
    }
    std::string text;
    rio::Rational rio_cost = rio::scheme_sense_cost(rio::SchemeKind::Rio, opt.level_count);
    for (rio::SchemeKind scheme : {rio::SchemeKind::Interleaved, rio::SchemeKind::NonInterleaved,
                                   rio::SchemeKind::Rio}) {
        rio::Rational cost = rio::scheme_sense_cost(scheme, opt.level_count);
        text += std::string(rio::to_string(scheme)) + ": senses_per_chunk=" + cost.str() +
                " rio_speedup=" + (cost / rio_cost).str() + "\n";
    }
    emit(opt.out_path, text);
    return 0;
}

int cmd_synthesize(const Options& opt) {
    auto code = rio::synthesize_wom_code(opt.synth_n, opt.synth_k, opt.synth_t);
    if (!code) {
        std::cerr << "no (" << opt.synth_n << "," << opt.synth_k << "," << opt.synth_t
                  << ") write-once code exists; search space exhausted\n";
        return kExitNotFound;
    }
    rio::save_wom_code(*code, opt.out_path);
    std::cout << "found n=" << code->n() << " k=" << code->k() << " t=" << code->t()
              << " code, wrote " << opt.out_path << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    rio::WomCodeSpec code = rio::load_wom_code(opt.spec_path);
    rio::WomVerificationReport report = rio::verify_wom_code(code);
    if (report.is_valid) {
        std::cout << "valid: all " << (1ll << (code.k() * code.t()))
                  << " write sequences decode correctly\n";
        return 0;
    }
    std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const rio::WomViolation& violation : report.violations) {
        std::cout << "  " << rio::to_string(violation.kind) << " after writes";
        for (const rio::InfoWord& info : violation.writes)
            std::cout << " " << info.str();
        std::cout << "\n";
    }
    return kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIO coding: single-sense random reads for multi-level memories"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* encode = app.add_subcommand(
        "encode", "Encode a payload into a level word file.\n"
                  "The payload is ceil(K/4) hex digits (optional 0x prefix); its most\n"
                  "significant bit is the first bit of subset 1 and unused low-order\n"
                  "bits of the last digit must be zero.");
    encode->add_option("payload", opt.input, "payload as hex digits")->required();
    encode->add_option("--spec", opt.spec_path, "code spec JSON (default: built-in (3,2,2) code)");
    encode->add_option("--out", opt.out_path, "level word output path")->required();

    CLI::App* decode = app.add_subcommand("decode", "Read back all K payload bits (t senses).");
    decode->add_option("levels", opt.input, "level word file")->required();
    decode->add_option("--spec", opt.spec_path, "code spec JSON (default: built-in code)");

    CLI::App* read_chunk = app.add_subcommand(
        "read-chunk", "Recover one k-bit subset with a single sense.");
    read_chunk->add_option("levels", opt.input, "level word file")->required();
    read_chunk->add_option("--subset", opt.subset, "subset index, 1..t")->required();
    read_chunk->add_option("--spec", opt.spec_path, "code spec JSON (default: built-in code)");

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Best asymptotic rate, programming fractions, and shaping loss for t writes.");
    analyze->add_option("--writes", opt.writes, "number of writes t (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    analyze->add_option("--format", opt.format, "csv or plain")
        ->check(CLI::IsMember({"csv", "plain"}));
    analyze->add_option("--out", opt.out_path, "write the report here instead of stdout");

    CLI::App* compare = app.add_subcommand(
        "compare", "Per-chunk sense cost of interleaved, non-interleaved, and RIO reads.");
    compare->add_option("--levels", opt.level_count, "number of cell levels M (>= 2)")
        ->required();
    compare->add_option("--format", opt.format, "csv or plain")
        ->check(CLI::IsMember({"csv", "plain"}));
    compare->add_option("--out", opt.out_path, "write the report here instead of stdout");

    CLI::App* synthesize = app.add_subcommand(
        "synthesize-wom", "Search for an (n, k, t) write-once code (n <= 4, k <= 2, t <= 3).");
    synthesize->add_option("n", opt.synth_n, "cell count")->required();
    synthesize->add_option("k", opt.synth_k, "bits per write")->required();
    synthesize->add_option("t", opt.synth_t, "number of writes")->required();
    synthesize->add_option("--out", opt.out_path, "code spec output path")->required();

    CLI::App* verify = app.add_subcommand(
        "verify-wom", "Replay every write sequence of a code spec and report violations.");
    verify->add_option("--spec", opt.spec_path, "code spec JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(encode))
            return cmd_encode(opt);
        if (app.got_subcommand(decode))
            return cmd_decode(opt);
        if (app.got_subcommand(read_chunk))
            return cmd_read_chunk(opt);
        if (app.got_subcommand(analyze))
            return cmd_analyze(opt);
        if (app.got_subcommand(compare))
            return cmd_compare(opt);
        if (app.got_subcommand(synthesize))
            return cmd_synthesize(opt);
        if (app.got_subcommand(verify))
            return cmd_verify(opt);
    } catch (const rio::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const rio::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
