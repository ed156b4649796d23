#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rio/rational.hpp"
#include "rio/rio_code.hpp"

namespace rio {

// One wordline of the simulated device. Programmed at most once; every
// threshold comparison runs through here and bumps the sense counter.
class SimWordline {
public:
    SimWordline() = default;

    void program(const LevelWord& word);
    BinaryCellState sense(SenseThreshold threshold);

    bool programmed() const { return word_.has_value(); }
    std::uint64_t sense_count() const { return sense_count_; }
    const LevelWord& word() const;

private:
    std::optional<LevelWord> word_;
    std::uint64_t sense_count_ = 0;
};

enum class SchemeKind {
    Interleaved,    // one codeword spans all logical pages: M-1 senses per chunk
    NonInterleaved, // chunk within one logical page: (M-1)/log2(M) senses on average
    Rio,            // one sense per chunk
};

const char* to_string(SchemeKind scheme);

// Senses needed to read one data chunk under the given scheme, exact.
// NonInterleaved requires M to be a power of two.
Rational scheme_sense_cost(SchemeKind scheme, int level_count);

struct ChunkRead {
    std::size_t wordline = 0;
    int subset = 1;
};

struct WorkloadReport {
    std::uint64_t reads = 0;
    std::uint64_t total_senses = 0;
    double senses_per_chunk = 0.0;
    double speedup_vs_interleaved = 0.0; // (M-1) / senses_per_chunk
};

// Chunk read through the wordline's sense counter.
Bits read_chunk_counted(const RioCodeSpec& spec, SimWordline& wordline, int subset);

// Programs one wordline per payload, then executes the chunk reads through
// the counters and reports the measured per-chunk sense cost.
WorkloadReport simulate_workload(const RioCodeSpec& spec, const std::vector<Bits>& payloads,
                                 const std::vector<ChunkRead>& reads);

// Workload file: one "<wordline-index> <subset-index>" pair per line;
// blank lines and lines starting with '#' are skipped.
std::vector<ChunkRead> parse_workload(std::istream& in);
std::vector<ChunkRead> parse_workload_text(const std::string& text);

// CSV with header "scheme,M,reads,total_senses,senses_per_chunk,speedup".
// The workload report carries the measured counts with speedup relative to
// an interleaved read of the same wordline.
std::string workload_report_csv(const WorkloadReport& report, int level_count);

// Same CSV schema for the cost model: one row per scheme with zero read
// counts; the speedup column is the RIO speedup over that row's scheme.
std::string compare_schemes_csv(int level_count);

} // namespace rio
