#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rio/bits.hpp"

namespace rio {

// Explicit write strategy for one write index: prior state index -> info
// value -> successor state index.
using WriteTable = std::map<std::uint32_t, std::map<std::uint32_t, std::uint32_t>>;

// A write-once-memory code: k bits written into n binary cells t times.
// The decode map is total over all 2^n reads. Write strategies are either
// explicit per-write tables (as loaded from a spec file) or, when the
// tables are absent, resolved on demand by a deterministic search over the
// decode map: minimal newly-programmed weight first, ties broken by the
// lexicographically smallest support, restricted to successors that keep
// the remaining writes serviceable.
class WomCodeSpec {
public:
    WomCodeSpec(int n, int k, int t, std::vector<std::uint32_t> decode_map);
    WomCodeSpec(int n, int k, int t, std::vector<std::uint32_t> decode_map,
                std::vector<WriteTable> write_tables);

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }

    // Entry s is the info value decoded from the read with state index s.
    const std::vector<std::uint32_t>& decode_map() const { return decode_map_; }

    bool has_write_tables() const { return !write_tables_.empty(); }
    const std::vector<WriteTable>& write_tables() const { return write_tables_; }

    friend bool operator==(const WomCodeSpec&, const WomCodeSpec&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    int t_ = 0;
    std::vector<std::uint32_t> decode_map_;
    std::vector<WriteTable> write_tables_; // empty = on-demand strategy
};

enum class WomViolationKind {
    Monotonicity,   // a write erased an already-programmed cell
    DecodeMismatch, // the successor state decodes to the wrong info word
    NoSuccessor,    // no successor exists (or the write table has a hole)
};

const char* to_string(WomViolationKind kind);

struct WomViolation {
    // Info sequence from the first write up to and including the failing one.
    std::vector<InfoWord> writes;
    WomViolationKind kind = WomViolationKind::NoSuccessor;
};

struct WomVerificationReport {
    bool is_valid = true;
    std::vector<WomViolation> violations;
};

// The (n=3, k=2, t=2) code whose decode table pairs each read with its
// complement, shipped with explicit write tables.
WomCodeSpec toy_code();

// Applies write `write_index` (1..t) of `info` on top of `prior`.
BinaryCellState wom_encode(const WomCodeSpec& code, int write_index, const InfoWord& info,
                           const BinaryCellState& prior);

InfoWord wom_decode(const WomCodeSpec& code, const BinaryCellState& read);

// Replays every t-length info sequence from the all-erased state and
// records all monotonicity, decode, and missing-successor violations.
// Requires k*t <= 24.
WomVerificationReport verify_wom_code(const WomCodeSpec& code);

// Exhaustive search for an (n, k, t) code, n <= 4, k <= 2, t <= 3. Returns
// the code whose decode map comes first in lexicographic order (reads
// enumerated by state index, info values ascending), with write tables
// materialized; or nullopt when no code exists at these parameters.
std::optional<WomCodeSpec> synthesize_wom_code(int n, int k, int t);

// Fills in explicit write tables over all reachable states using the
// on-demand strategy. Returns the input unchanged if tables are present.
WomCodeSpec with_materialized_tables(const WomCodeSpec& code);

} // namespace rio
