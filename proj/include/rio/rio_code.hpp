#pragma once

#include <string>
#include <vector>

#include "rio/bits.hpp"
#include "rio/rational.hpp"
#include "rio/wom_code.hpp"

namespace rio {

// A programmed multi-level wordline: one level in 0..M-1 per cell.
class LevelWord {
public:
    LevelWord(int level_count, std::vector<int> levels);

    int level_count() const { return level_count_; } // M
    int n() const { return static_cast<int>(levels_.size()); }
    int level(int cell) const;                       // cell in 1..n
    const std::vector<int>& levels() const { return levels_; }

    std::string str() const; // "2,0,0"

    friend bool operator==(const LevelWord&, const LevelWord&) = default;

private:
    int level_count_ = 2;
    std::vector<int> levels_;
};

// A read threshold placed between levels r-1 and r; valid r is 1..M-1.
struct SenseThreshold {
    int r = 1;
};

// One threshold comparison across the wordline: cells below the threshold
// read erased ("1"), cells at or above it read programmed ("0").
BinaryCellState sense(const LevelWord& word, SenseThreshold threshold);

// A RIO code built from a WOM code: the t sequential writes of the WOM code
// become a single assignment onto M = t+1 levels. Subset j of the payload
// (k bits, subset 1 first) is recovered with one sense at threshold M-j,
// i.e. subset 1 reads at the highest threshold.
class RioCodeSpec {
public:
    explicit RioCodeSpec(WomCodeSpec wom);

    const WomCodeSpec& wom() const { return wom_; }
    int n() const { return wom_.n(); }
    int level_count() const { return wom_.t() + 1; } // M
    int payload_bits() const { return wom_.k() * wom_.t(); } // K
    int subsets() const { return wom_.t(); }

private:
    WomCodeSpec wom_;
};

// Runs the t WOM writes on the payload's k-bit subsets and assigns level
// M-j to the cells first programmed in write j, level 0 to the rest.
LevelWord rio_encode(const RioCodeSpec& spec, const Bits& data);

// Recovers payload subset j (1..t) with exactly one sense.
Bits rio_read_chunk(const RioCodeSpec& spec, const LevelWord& word, int subset);

// All K payload bits back, using t senses.
Bits rio_decode_all(const RioCodeSpec& spec, const LevelWord& word);

// Exact K/n.
Rational bits_per_cell(const RioCodeSpec& spec);

// Level-word text format: a line "M=<int>", then the comma-separated levels.
std::string level_word_to_text(const LevelWord& word);
LevelWord level_word_from_text(const std::string& text);

// Payload hex: ceil(bits/4) digits, most significant bit first (= first bit
// of subset 1); unused low-order bits of the last digit must be zero.
std::string payload_to_hex(const Bits& payload);
Bits payload_from_hex(std::string_view hex, int bit_count);

} // namespace rio
