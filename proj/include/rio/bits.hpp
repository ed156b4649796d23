#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rio {

// Fixed-width bit string of up to 64 bits. Bit 0 is the first (leftmost,
// most significant) bit, matching the order in which information words and
// payloads are written out as text.
class Bits {
public:
    Bits() = default;
    Bits(int size, std::uint64_t value);

    static Bits zeros(int size);
    static Bits from_string(std::string_view text);

    int size() const { return size_; }
    std::uint64_t value() const { return value_; }

    // i in [0, size), 0 = first/most significant bit.
    int bit(int i) const;

    Bits slice(int pos, int len) const;
    static Bits concat(const Bits& a, const Bits& b);

    std::string str() const;

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    int size_ = 0;
    std::uint64_t value_ = 0;
};

// A k-bit information word written in one WOM write.
using InfoWord = Bits;

// State of an n-cell write-once wordline as seen through one threshold.
// Each cell is either still erased ("1") or programmed ("0") and may only
// move from erased to programmed. Cells are numbered 1..n left to right,
// so the printed state string read as a binary number is the state index.
class BinaryCellState {
public:
    static constexpr int kMaxCells = 24;

    BinaryCellState() = default;
    BinaryCellState(int n, std::uint32_t index);

    static BinaryCellState all_erased(int n);
    static BinaryCellState from_string(std::string_view text);

    int n() const { return n_; }

    // The state string interpreted as a binary number (cell 1 = MSB).
    std::uint32_t index() const { return word_; }

    bool erased(int cell) const;     // cell in 1..n
    bool programmed(int cell) const { return !erased(cell); }

    int programmed_count() const;

    // Programmed cell numbers, ascending.
    std::vector<int> support() const;

    // True when every cell programmed in `prior` is still programmed here.
    bool successor_of(const BinaryCellState& prior) const;

    std::string str() const;

    friend bool operator==(const BinaryCellState&, const BinaryCellState&) = default;

private:
    int n_ = 0;
    std::uint32_t word_ = 0; // bit (n-1-i) holds cell i+1; 1 = erased
};

} // namespace rio
