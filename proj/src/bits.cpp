#include "rio/bits.hpp"

#include <bit>

#include "rio/errors.hpp"

namespace rio {

Bits::Bits(int size, std::uint64_t value) : size_(size), value_(value) {
    if (size < 1 || size > 64)
        throw DimensionMismatch("bit string size must be in 1..64, got " + std::to_string(size));
    if (size < 64 && value >> size)
        throw DimensionMismatch("bit string value does not fit in " + std::to_string(size) + " bits");
}

Bits Bits::zeros(int size) {
    return Bits(size, 0);
}

Bits Bits::from_string(std::string_view text) {
    if (text.empty() || text.size() > 64)
        throw FormatError("bit string must have 1..64 characters");
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw FormatError("bit string may contain only '0' and '1'");
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Bits(static_cast<int>(text.size()), value);
}

int Bits::bit(int i) const {
    if (i < 0 || i >= size_)
        throw IndexOutOfRange("bit index " + std::to_string(i) + " out of range");
    return static_cast<int>((value_ >> (size_ - 1 - i)) & 1u);
}

Bits Bits::slice(int pos, int len) const {
    if (pos < 0 || len < 1 || pos + len > size_)
        throw IndexOutOfRange("bit slice out of range");
    std::uint64_t shifted = value_ >> (size_ - pos - len);
    std::uint64_t mask = (len == 64) ? ~0ull : ((1ull << len) - 1);
    return Bits(len, shifted & mask);
}

Bits Bits::concat(const Bits& a, const Bits& b) {
    return Bits(a.size_ + b.size_, (a.value_ << b.size_) | b.value_);
}

std::string Bits::str() const {
    std::string out(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<char>('0' + bit(i));
    return out;
}

BinaryCellState::BinaryCellState(int n, std::uint32_t index) : n_(n), word_(index) {
    if (n < 1 || n > kMaxCells)
        throw DimensionMismatch("cell count must be in 1.." + std::to_string(kMaxCells));
    if (n < 32 && index >> n)
        throw DimensionMismatch("state index does not fit in " + std::to_string(n) + " cells");
}

BinaryCellState BinaryCellState::all_erased(int n) {
    if (n < 1 || n > kMaxCells)
        throw DimensionMismatch("cell count must be in 1.." + std::to_string(kMaxCells));
    return BinaryCellState(n, (1u << n) - 1);
}

BinaryCellState BinaryCellState::from_string(std::string_view text) {
    if (text.empty() || text.size() > kMaxCells)
        throw FormatError("cell state string must have 1.." + std::to_string(kMaxCells) + " characters");
    std::uint32_t word = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw FormatError("cell state string may contain only '0' and '1'");
        word = (word << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BinaryCellState(static_cast<int>(text.size()), word);
}

bool BinaryCellState::erased(int cell) const {
    if (cell < 1 || cell > n_)
        throw IndexOutOfRange("cell " + std::to_string(cell) + " out of range 1.." + std::to_string(n_));
    return ((word_ >> (n_ - cell)) & 1u) != 0;
}

int BinaryCellState::programmed_count() const {
    return n_ - std::popcount(word_);
}

std::vector<int> BinaryCellState::support() const {
    std::vector<int> cells;
    for (int c = 1; c <= n_; ++c)
        if (programmed(c))
            cells.push_back(c);
    return cells;
}

bool BinaryCellState::successor_of(const BinaryCellState& prior) const {
    if (prior.n_ != n_)
        throw DimensionMismatch("cannot compare states of different lengths");
    // Erased cells may only shrink: our erased set must be a subset.
    return (word_ & ~prior.word_) == 0;
}

std::string BinaryCellState::str() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int c = 1; c <= n_; ++c)
        out[static_cast<std::size_t>(c - 1)] = erased(c) ? '1' : '0';
    return out;
}

} // namespace rio
