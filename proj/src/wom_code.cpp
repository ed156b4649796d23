#include "rio/wom_code.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "rio/errors.hpp"

namespace rio {

namespace {

constexpr int kOnDemandMaxCells = 12;

// Walks all submasks of `mask`, including `mask` itself and 0. Programming
// cells clears erased bits, so the successors of a state are exactly the
// submasks of its erased set.
template <typename Fn>
void for_each_submask(std::uint32_t mask, Fn&& fn) {
    std::uint32_t sub = mask;
    while (true) {
        fn(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & mask;
    }
}

// One flag per state index: can j more writes always succeed from here?
using WritableSet = std::vector<char>;

// writable[j][s] is true when from state s every info value is reachable by
// a monotone transition into a (j-1)-writable state, for all j levels deep.
std::vector<WritableSet> exact_writability(const std::vector<std::uint32_t>& decode, int n,
                                           int k, int levels) {
    const std::uint32_t states = 1u << n;
    const std::uint32_t values = 1u << k;
    std::vector<WritableSet> writable(static_cast<std::size_t>(levels) + 1,
                                      WritableSet(states, 1));
    std::vector<std::uint32_t> seen(values, 0);
    std::uint32_t generation = 0;
    for (int j = 1; j <= levels; ++j) {
        const WritableSet& below = writable[static_cast<std::size_t>(j) - 1];
        WritableSet& level = writable[static_cast<std::size_t>(j)];
        for (std::uint32_t s = 0; s < states; ++s) {
            ++generation;
            std::uint32_t covered = 0;
            for_each_submask(s, [&](std::uint32_t succ) {
                if (below[succ] && seen[decode[succ]] != generation) {
                    seen[decode[succ]] = generation;
                    ++covered;
                }
            });
            level[s] = covered == values;
        }
    }
    return writable;
}

bool support_less(std::uint32_t a, std::uint32_t b, int n) {
    for (int c = 1; c <= n; ++c) {
        bool pa = ((a >> (n - c)) & 1u) == 0;
        bool pb = ((b >> (n - c)) & 1u) == 0;
        if (pa != pb)
            return pa; // the state with the earlier programmed cell wins
    }
    return false;
}

// Minimal newly-programmed weight, then lexicographically smallest support,
// among decode-consistent successors that stay writable for the remaining
// writes. Returns nullopt when the prior admits no such successor.
std::optional<std::uint32_t> choose_successor(const std::vector<std::uint32_t>& decode, int n,
                                              std::uint32_t prior, std::uint32_t info_value,
                                              const WritableSet& writable) {
    std::optional<std::uint32_t> best;
    int best_new = 0;
    for_each_submask(prior, [&](std::uint32_t succ) {
        if (decode[succ] != info_value)
            return;
        if (!writable[succ])
            return;
        int new_cells = std::popcount(prior ^ succ);
        if (!best || new_cells < best_new ||
            (new_cells == best_new && support_less(succ, *best, n))) {
            best = succ;
            best_new = new_cells;
        }
    });
    return best;
}

std::uint32_t lookup_write_table(const WriteTable& table, std::uint32_t prior,
                                 std::uint32_t info_value, int write_index) {
    auto row = table.find(prior);
    if (row == table.end())
        throw NoValidSuccessor("write table " + std::to_string(write_index) +
                               " has no row for this prior state");
    auto cell = row->second.find(info_value);
    if (cell == row->second.end())
        throw NoValidSuccessor("write table " + std::to_string(write_index) +
                               " has no entry for this info word");
    return cell->second;
}

} // namespace

WomCodeSpec::WomCodeSpec(int n, int k, int t, std::vector<std::uint32_t> decode_map)
    : WomCodeSpec(n, k, t, std::move(decode_map), {}) {}

WomCodeSpec::WomCodeSpec(int n, int k, int t, std::vector<std::uint32_t> decode_map,
                         std::vector<WriteTable> write_tables)
    : n_(n), k_(k), t_(t), decode_map_(std::move(decode_map)),
      write_tables_(std::move(write_tables)) {
    if (n < 1 || n > BinaryCellState::kMaxCells)
        throw DimensionMismatch("cell count must be in 1.." +
                                std::to_string(BinaryCellState::kMaxCells));
    if (k < 1 || k > 16)
        throw DimensionMismatch("bits per write must be in 1..16");
    if (t < 1)
        throw DimensionMismatch("write count must be at least 1");
    if (decode_map_.size() != (1ull << n))
        throw DimensionMismatch("decode map must have exactly 2^n entries");
    for (std::uint32_t value : decode_map_)
        if (value >> k)
            throw DimensionMismatch("decode map entry does not fit in k bits");
    if (!write_tables_.empty()) {
        if (write_tables_.size() != static_cast<std::size_t>(t))
            throw DimensionMismatch("expected one write table per write");
        for (const WriteTable& table : write_tables_)
            for (const auto& [prior, row] : table) {
                if (prior >> n)
                    throw DimensionMismatch("write table prior state out of range");
                for (const auto& [info, succ] : row)
                    if ((info >> k) || (succ >> n))
                        throw DimensionMismatch("write table entry out of range");
            }
    }
}

const char* to_string(WomViolationKind kind) {
    switch (kind) {
    case WomViolationKind::Monotonicity:
        return "monotonicity";
    case WomViolationKind::DecodeMismatch:
        return "decode-mismatch";
    case WomViolationKind::NoSuccessor:
        return "no-successor";
    }
    return "unknown";
}

WomCodeSpec toy_code() {
    // Decode table, indexed by state: each read and its complement carry the
    // same info word.
    //   011/100 -> 00    010/101 -> 01    001/110 -> 10    000/111 -> 11
    std::vector<std::uint32_t> decode = {3, 2, 1, 0, 0, 1, 2, 3};
    return with_materialized_tables(WomCodeSpec(3, 2, 2, std::move(decode)));
}

InfoWord wom_decode(const WomCodeSpec& code, const BinaryCellState& read) {
    if (read.n() != code.n())
        throw DimensionMismatch("read has " + std::to_string(read.n()) + " cells, code expects " +
                                std::to_string(code.n()));
    return InfoWord(code.k(), code.decode_map()[read.index()]);
}

BinaryCellState wom_encode(const WomCodeSpec& code, int write_index, const InfoWord& info,
                           const BinaryCellState& prior) {
    if (write_index < 1 || write_index > code.t())
        throw IndexOutOfRange("write index " + std::to_string(write_index) + " out of range 1.." +
                              std::to_string(code.t()));
    if (info.size() != code.k())
        throw DimensionMismatch("info word has " + std::to_string(info.size()) +
                                " bits, code expects " + std::to_string(code.k()));
    if (prior.n() != code.n())
        throw DimensionMismatch("prior state has " + std::to_string(prior.n()) +
                                " cells, code expects " + std::to_string(code.n()));

    if (code.has_write_tables()) {
        std::uint32_t succ = lookup_write_table(code.write_tables()[static_cast<std::size_t>(
                                                    write_index - 1)],
                                                prior.index(), static_cast<std::uint32_t>(info.value()),
                                                write_index);
        return BinaryCellState(code.n(), succ);
    }

    if (code.n() > kOnDemandMaxCells)
        throw EnumerationTooLarge("on-demand write strategy supports n <= " +
                                  std::to_string(kOnDemandMaxCells) +
                                  "; materialize write tables first");
    int remaining = code.t() - write_index;
    auto writable = exact_writability(code.decode_map(), code.n(), code.k(), remaining);
    auto succ = choose_successor(code.decode_map(), code.n(), prior.index(),
                                 static_cast<std::uint32_t>(info.value()),
                                 writable[static_cast<std::size_t>(remaining)]);
    if (!succ)
        throw NoValidSuccessor("no monotone successor decodes to " + info.str() + " at write " +
                               std::to_string(write_index));
    return BinaryCellState(code.n(), *succ);
}

WomCodeSpec with_materialized_tables(const WomCodeSpec& code) {
    if (code.has_write_tables())
        return code;
    std::vector<WriteTable> tables(static_cast<std::size_t>(code.t()));
    std::vector<BinaryCellState> frontier = {BinaryCellState::all_erased(code.n())};
    const std::uint32_t values = 1u << code.k();
    for (int j = 1; j <= code.t(); ++j) {
        std::unordered_set<std::uint32_t> next_seen;
        std::vector<BinaryCellState> next;
        for (const BinaryCellState& prior : frontier) {
            for (std::uint32_t v = 0; v < values; ++v) {
                BinaryCellState succ = wom_encode(code, j, InfoWord(code.k(), v), prior);
                tables[static_cast<std::size_t>(j - 1)][prior.index()][v] = succ.index();
                if (j < code.t() && next_seen.insert(succ.index()).second)
                    next.push_back(succ);
            }
        }
        frontier = std::move(next);
    }
    return WomCodeSpec(code.n(), code.k(), code.t(), code.decode_map(), std::move(tables));
}

WomVerificationReport verify_wom_code(const WomCodeSpec& code) {
    if (static_cast<long long>(code.k()) * code.t() > 24)
        throw EnumerationTooLarge("verification enumerates 2^(k*t) sequences; k*t must be <= 24");

    WomVerificationReport report;
    const std::uint32_t values = 1u << code.k();
    // Every info sequence is replayed; sequences sharing a prefix share the
    // state it leads to, so each (state, write, info) triple is checked once
    // with the first sequence that reaches it as the witness.
    std::unordered_set<std::uint64_t> visited;
    std::vector<InfoWord> prefix;

    auto record = [&](std::uint32_t v, WomViolationKind kind) {
        WomViolation violation;
        violation.writes = prefix;
        violation.writes.push_back(InfoWord(code.k(), v));
        violation.kind = kind;
        report.violations.push_back(std::move(violation));
    };

    auto walk = [&](auto&& self, const BinaryCellState& state, int depth) -> void {
        std::uint64_t key = (static_cast<std::uint64_t>(depth) << 32) | state.index();
        if (!visited.insert(key).second)
            return;
        if (depth > code.t())
            return;
        for (std::uint32_t v = 0; v < values; ++v) {
            InfoWord info(code.k(), v);
            BinaryCellState succ;
            try {
                succ = wom_encode(code, depth, info, state);
            } catch (const NoValidSuccessor&) {
                record(v, WomViolationKind::NoSuccessor);
                continue;
            }
            if (!succ.successor_of(state))
                record(v, WomViolationKind::Monotonicity);
            if (wom_decode(code, succ) != info)
                record(v, WomViolationKind::DecodeMismatch);
            if (depth < code.t()) {
                prefix.push_back(info);
                self(self, succ, depth + 1);
                prefix.pop_back();
            }
        }
    };
    walk(walk, BinaryCellState::all_erased(code.n()), 1);

    report.is_valid = report.violations.empty();
    return report;
}

namespace {

// Depth-first search over partial decode maps, assigning state indices in
// ascending order so that complete maps are visited in exact lexicographic
// order. Two sound bounds steer it:
//  - optimistic: unassigned reads may still decode to anything, but the
//    witnesses for distinct info values must be distinct states (Hall's
//    condition); if even this relaxation is not t-writable, no completion
//    of the prefix is valid and the subtree is skipped.
//  - pessimistic: unassigned reads count as unusable; if the prefix is
//    already t-writable, every completion is valid, and filling the rest
//    with value 0 yields the lexicographically smallest one.
class DecodeMapSearch {
public:
    DecodeMapSearch(int n, int k, int t)
        : t_(t), states_(1u << n), values_(1u << k), assignment_(states_, kUnassigned) {}

    std::optional<std::vector<std::uint32_t>> run() {
        if (dfs(0))
            return result_;
        return std::nullopt;
    }

private:
    static constexpr int kUnassigned = -1;

    bool dfs(std::uint32_t index) {
        if (!writable_all_erased(true))
            return false;
        if (writable_all_erased(false)) {
            result_.assign(assignment_.begin(), assignment_.end());
            for (std::uint32_t s = 0; s < states_; ++s)
                if (assignment_[s] == kUnassigned)
                    result_[s] = 0;
            return true;
        }
        if (index == states_)
            return false;
        for (int v = 0; v < static_cast<int>(values_); ++v) {
            assignment_[index] = v;
            if (dfs(index + 1))
                return true;
        }
        assignment_[index] = kUnassigned;
        return false;
    }

    bool writable_all_erased(bool optimistic) {
        const std::uint32_t all = states_ - 1; // all-erased state index
        std::uint32_t writable = (states_ == 32) ? ~0u : ((1u << states_) - 1);
        for (int j = 1; j <= t_; ++j) {
            std::uint32_t level = 0;
            for (std::uint32_t s = 0; s < states_; ++s) {
                if (state_ok(s, writable, optimistic))
                    level |= 1u << s;
            }
            writable = level;
            if (!(writable >> all & 1))
                return false; // higher levels only shrink
        }
        return true;
    }

    bool state_ok(std::uint32_t s, std::uint32_t writable_below, bool optimistic) {
        std::uint32_t witness[4] = {0, 0, 0, 0}; // per info value, mask over states
        std::uint32_t sub = s;
        while (true) {
            if (writable_below >> sub & 1) {
                int val = assignment_[sub];
                if (val >= 0) {
                    witness[val] |= 1u << sub;
                } else if (optimistic) {
                    for (std::uint32_t v = 0; v < values_; ++v)
                        witness[v] |= 1u << sub;
                }
            }
            if (sub == 0)
                break;
            sub = (sub - 1) & s;
        }
        // Hall's condition: every set of info values needs at least as many
        // distinct witness states.
        for (std::uint32_t group = 1; group < (1u << values_); ++group) {
            std::uint32_t pool = 0;
            for (std::uint32_t v = 0; v < values_; ++v)
                if (group >> v & 1)
                    pool |= witness[v];
            if (std::popcount(pool) < std::popcount(group))
                return false;
        }
        return true;
    }

    int t_;
    std::uint32_t states_, values_;
    std::vector<int> assignment_;
    std::vector<std::uint32_t> result_;
};

} // namespace

std::optional<WomCodeSpec> synthesize_wom_code(int n, int k, int t) {
    if (n < 1 || n > 4 || k < 1 || k > 2 || t < 1 || t > 3)
        throw SearchSpaceTooLarge("synthesis supports 1 <= n <= 4, 1 <= k <= 2, 1 <= t <= 3");
    DecodeMapSearch search(n, k, t);
    auto decode = search.run();
    if (!decode)
        return std::nullopt;
    return with_materialized_tables(WomCodeSpec(n, k, t, std::move(*decode)));
}

} // namespace rio
