#include "rio/flash_sim.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <sstream>

#include "rio/errors.hpp"

namespace rio {

namespace {

std::string fixed4(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

} // namespace

void SimWordline::program(const LevelWord& word) {
    if (word_)
        throw AlreadyProgrammed("wordline is already programmed");
    word_ = word;
}

BinaryCellState SimWordline::sense(SenseThreshold threshold) {
    if (!word_)
        throw NotProgrammed("cannot sense an unprogrammed wordline");
    BinaryCellState read = rio::sense(*word_, threshold);
    ++sense_count_; // counted only after a successful comparison
    return read;
}

const LevelWord& SimWordline::word() const {
    if (!word_)
        throw NotProgrammed("wordline is not programmed");
    return *word_;
}

const char* to_string(SchemeKind scheme) {
    switch (scheme) {
    case SchemeKind::Interleaved:
        return "interleaved";
    case SchemeKind::NonInterleaved:
        return "non_interleaved";
    case SchemeKind::Rio:
        return "rio";
    }
    return "unknown";
}

Rational scheme_sense_cost(SchemeKind scheme, int level_count) {
    if (level_count < 2)
        throw DomainError("sense cost needs at least 2 levels");
    switch (scheme) {
    case SchemeKind::Interleaved:
        return Rational(level_count - 1, 1);
    case SchemeKind::NonInterleaved: {
        if (!std::has_single_bit(static_cast<unsigned>(level_count)))
            throw UnsupportedM("the non-interleaved cost (M-1)/log2(M) needs M to be a power "
                               "of two, got M=" +
                               std::to_string(level_count));
        int pages = std::countr_zero(static_cast<unsigned>(level_count));
        return Rational(level_count - 1, pages);
    }
    case SchemeKind::Rio:
        return Rational(1, 1);
    }
    throw DomainError("unknown scheme");
}

Bits read_chunk_counted(const RioCodeSpec& spec, SimWordline& wordline, int subset) {
    if (subset < 1 || subset > spec.subsets())
        throw IndexOutOfRange("subset " + std::to_string(subset) + " out of range 1.." +
                              std::to_string(spec.subsets()));
    BinaryCellState read = wordline.sense(SenseThreshold{spec.level_count() - subset});
    return wom_decode(spec.wom(), read);
}

WorkloadReport simulate_workload(const RioCodeSpec& spec, const std::vector<Bits>& payloads,
                                 const std::vector<ChunkRead>& reads) {
    std::vector<SimWordline> wordlines(payloads.size());
    for (std::size_t i = 0; i < payloads.size(); ++i)
        wordlines[i].program(rio_encode(spec, payloads[i]));

    for (const ChunkRead& read : reads) {
        if (read.wordline >= wordlines.size())
            throw IndexOutOfRange("wordline index " + std::to_string(read.wordline) +
                                  " out of range, have " + std::to_string(wordlines.size()) +
                                  " wordlines");
        read_chunk_counted(spec, wordlines[read.wordline], read.subset);
    }

    WorkloadReport report;
    report.reads = reads.size();
    for (const SimWordline& wordline : wordlines)
        report.total_senses += wordline.sense_count();
    if (report.reads > 0) {
        report.senses_per_chunk =
            static_cast<double>(report.total_senses) / static_cast<double>(report.reads);
        report.speedup_vs_interleaved =
            static_cast<double>(spec.level_count() - 1) / report.senses_per_chunk;
    }
    return report;
}

std::vector<ChunkRead> parse_workload(std::istream& in) {
    std::vector<ChunkRead> reads;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#')
            continue;
        ChunkRead read;
        std::string second, extra;
        if (!(fields >> second) || (fields >> extra))
            throw FormatError("workload line " + std::to_string(line_number) +
                              " must be '<wordline-index> <subset-index>'");
        try {
            std::size_t used = 0;
            long long wordline = std::stoll(first, &used);
            if (used != first.size() || wordline < 0)
                throw FormatError("");
            read.wordline = static_cast<std::size_t>(wordline);
            read.subset = std::stoi(second, &used);
            if (used != second.size())
                throw FormatError("");
        } catch (const std::exception&) {
            throw FormatError("workload line " + std::to_string(line_number) +
                              " has a malformed index");
        }
        reads.push_back(read);
    }
    return reads;
}

std::vector<ChunkRead> parse_workload_text(const std::string& text) {
    std::istringstream in(text);
    return parse_workload(in);
}

namespace {
const char kReportHeader[] = "scheme,M,reads,total_senses,senses_per_chunk,speedup\n";
}

std::string workload_report_csv(const WorkloadReport& report, int level_count) {
    std::string out = kReportHeader;
    out += "rio," + std::to_string(level_count) + "," + std::to_string(report.reads) + "," +
           std::to_string(report.total_senses) + "," + fixed4(report.senses_per_chunk) + "," +
           fixed4(report.speedup_vs_interleaved) + "\n";
    return out;
}

std::string compare_schemes_csv(int level_count) {
    const Rational rio_cost = scheme_sense_cost(SchemeKind::Rio, level_count);
    std::string out = kReportHeader;
    for (SchemeKind scheme :
         {SchemeKind::Interleaved, SchemeKind::NonInterleaved, SchemeKind::Rio}) {
        Rational cost = scheme_sense_cost(scheme, level_count);
        Rational speedup = cost / rio_cost;
        out += std::string(to_string(scheme)) + "," + std::to_string(level_count) + ",0,0," +
               fixed4(cost.to_double()) + "," + fixed4(speedup.to_double()) + "\n";
    }
    return out;
}

} // namespace rio
