#include "rio/rio_code.hpp"

#include <sstream>

#include "rio/errors.hpp"

namespace rio {

LevelWord::LevelWord(int level_count, std::vector<int> levels)
    : level_count_(level_count), levels_(std::move(levels)) {
    if (level_count < 2)
        throw DomainError("a level word needs at least 2 levels");
    if (levels_.empty())
        throw DimensionMismatch("a level word needs at least one cell");
    for (int level : levels_)
        if (level < 0 || level >= level_count)
            throw DomainError("cell level " + std::to_string(level) + " outside 0.." +
                              std::to_string(level_count - 1));
}

int LevelWord::level(int cell) const {
    if (cell < 1 || cell > n())
        throw IndexOutOfRange("cell " + std::to_string(cell) + " out of range 1.." +
                              std::to_string(n()));
    return levels_[static_cast<std::size_t>(cell - 1)];
}

std::string LevelWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(levels_[i]);
    }
    return out;
}

BinaryCellState sense(const LevelWord& word, SenseThreshold threshold) {
    if (threshold.r < 1 || threshold.r >= word.level_count())
        throw ThresholdOutOfRange("threshold " + std::to_string(threshold.r) +
                                  " out of range 1.." + std::to_string(word.level_count() - 1));
    std::uint32_t state = 0;
    for (int cell = 1; cell <= word.n(); ++cell) {
        state <<= 1;
        if (word.level(cell) < threshold.r)
            state |= 1; // still below the threshold: reads erased
    }
    return BinaryCellState(word.n(), state);
}

RioCodeSpec::RioCodeSpec(WomCodeSpec wom) : wom_(std::move(wom)) {}

LevelWord rio_encode(const RioCodeSpec& spec, const Bits& data) {
    if (data.size() != spec.payload_bits())
        throw DimensionMismatch("payload has " + std::to_string(data.size()) +
                                " bits, the code stores K = " +
                                std::to_string(spec.payload_bits()));
    const int k = spec.wom().k();
    const int t = spec.wom().t();
    const int M = spec.level_count();

    std::vector<int> levels(static_cast<std::size_t>(spec.n()), 0);
    BinaryCellState state = BinaryCellState::all_erased(spec.n());
    for (int j = 1; j <= t; ++j) {
        InfoWord subset = data.slice(k * (j - 1), k);
        BinaryCellState next = wom_encode(spec.wom(), j, subset, state);
        for (int cell = 1; cell <= spec.n(); ++cell)
            if (state.erased(cell) && next.programmed(cell))
                levels[static_cast<std::size_t>(cell - 1)] = M - j;
        state = next;
    }
    return LevelWord(M, std::move(levels));
}

Bits rio_read_chunk(const RioCodeSpec& spec, const LevelWord& word, int subset) {
    if (subset < 1 || subset > spec.subsets())
        throw IndexOutOfRange("subset " + std::to_string(subset) + " out of range 1.." +
                              std::to_string(spec.subsets()));
    if (word.n() != spec.n() || word.level_count() != spec.level_count())
        throw DimensionMismatch("level word does not match the code's n and M");
    BinaryCellState read = sense(word, SenseThreshold{spec.level_count() - subset});
    return wom_decode(spec.wom(), read);
}

Bits rio_decode_all(const RioCodeSpec& spec, const LevelWord& word) {
    Bits out = rio_read_chunk(spec, word, 1);
    for (int j = 2; j <= spec.subsets(); ++j)
        out = Bits::concat(out, rio_read_chunk(spec, word, j));
    return out;
}

Rational bits_per_cell(const RioCodeSpec& spec) {
    return Rational(spec.payload_bits(), spec.n());
}

std::string level_word_to_text(const LevelWord& word) {
    return "M=" + std::to_string(word.level_count()) + "\n" + word.str() + "\n";
}

LevelWord level_word_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("M=", 0) != 0)
        throw FormatError("level word must start with a line 'M=<int>'");
    int level_count = 0;
    try {
        std::size_t used = 0;
        level_count = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2)
            throw FormatError("");
    } catch (const std::exception&) {
        throw FormatError("cannot parse level count from '" + line + "'");
    }

    if (!std::getline(in, line) || line.empty())
        throw FormatError("level word is missing the level line");
    std::vector<int> levels;
    std::istringstream cells(line);
    std::string token;
    while (std::getline(cells, token, ',')) {
        try {
            std::size_t used = 0;
            levels.push_back(std::stoi(token, &used));
            if (used != token.size())
                throw FormatError("");
        } catch (const std::exception&) {
            throw FormatError("cannot parse cell level from '" + token + "'");
        }
    }

    std::string rest;
    while (std::getline(in, rest))
        if (!rest.empty())
            throw FormatError("unexpected trailing content in level word");

    try {
        return LevelWord(level_count, std::move(levels));
    } catch (const Error& e) {
        throw FormatError(e.what());
    }
}

std::string payload_to_hex(const Bits& payload) {
    const int digits = (payload.size() + 3) / 4;
    const int pad = 4 * digits - payload.size();
    std::uint64_t value = payload.value() << pad;
    std::string out(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = "0123456789abcdef"[value & 0xf];
        value >>= 4;
    }
    return out;
}

Bits payload_from_hex(std::string_view hex, int bit_count) {
    if (bit_count < 1 || bit_count > 64)
        throw DimensionMismatch("payload size must be in 1..64 bits");
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    const int digits = (bit_count + 3) / 4;
    if (static_cast<int>(hex.size()) != digits)
        throw FormatError("payload for " + std::to_string(bit_count) + " bits must have exactly " +
                          std::to_string(digits) + " hex digits");
    std::uint64_t value = 0;
    for (char c : hex) {
        int digit;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            digit = c - 'A' + 10;
        else
            throw FormatError(std::string("invalid hex digit '") + c + "' in payload");
        value = (value << 4) | static_cast<std::uint64_t>(digit);
    }
    const int pad = 4 * digits - bit_count;
    if (value & ((1ull << pad) - 1))
        throw FormatError("payload has nonzero bits beyond the " + std::to_string(bit_count) +
                          "-bit width");
    return Bits(bit_count, value >> pad);
}

} // namespace rio
