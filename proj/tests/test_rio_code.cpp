#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <string>

#include "rio/errors.hpp"
#include "rio/rio_code.hpp"

using rio::BinaryCellState;
using rio::Bits;
using rio::InfoWord;
using rio::LevelWord;
using rio::RioCodeSpec;
using rio::SenseThreshold;

namespace {

RioCodeSpec toy_spec() {
    return RioCodeSpec(rio::toy_code());
}

LevelWord word3(int a, int b, int c) {
    return LevelWord(3, {a, b, c});
}

// The published joint table of the (3,2,2) code: entry [second][first] is
// the level word storing first-set column v1 and second-set row v2.
constexpr std::array<std::array<const char*, 4>, 4> kJointTable = {{
    {"200", "021", "012", "011"},
    {"201", "020", "102", "101"},
    {"210", "120", "002", "110"},
    {"211", "121", "112", "000"},
}};

LevelWord parse_entry(const char* digits) {
    std::vector<int> levels;
    for (const char* p = digits; *p; ++p)
        levels.push_back(*p - '0');
    return LevelWord(3, std::move(levels));
}

} // namespace

TEST_CASE("sense splits cells at the threshold") {
    CHECK(rio::sense(word3(2, 0, 0), SenseThreshold{2}) == BinaryCellState::from_string("011"));
    CHECK(rio::sense(word3(2, 0, 0), SenseThreshold{1}) == BinaryCellState::from_string("011"));
    CHECK(rio::sense(word3(1, 0, 2), SenseThreshold{2}) == BinaryCellState::from_string("110"));
    CHECK(rio::sense(word3(1, 0, 2), SenseThreshold{1}) == BinaryCellState::from_string("010"));
    CHECK(rio::sense(word3(0, 0, 0), SenseThreshold{1}) == BinaryCellState::all_erased(3));
    CHECK(rio::sense(word3(0, 0, 0), SenseThreshold{2}) == BinaryCellState::all_erased(3));
}

TEST_CASE("sense validates the threshold") {
    CHECK_THROWS_AS(rio::sense(word3(0, 0, 0), SenseThreshold{0}), rio::ThresholdOutOfRange);
    CHECK_THROWS_AS(rio::sense(word3(0, 0, 0), SenseThreshold{3}), rio::ThresholdOutOfRange);
}

TEST_CASE("rio spec derives its parameters from the wom code") {
    RioCodeSpec spec = toy_spec();
    CHECK(spec.n() == 3);
    CHECK(spec.level_count() == 3);
    CHECK(spec.payload_bits() == 4);
    CHECK(spec.subsets() == 2);
}

TEST_CASE("rio_encode pins the published level words where the strategy agrees") {
    RioCodeSpec spec = toy_spec();
    CHECK(rio::rio_encode(spec, Bits::from_string("0000")) == word3(2, 0, 0));
    CHECK(rio::rio_encode(spec, Bits::from_string("1111")) == word3(0, 0, 0));
}

TEST_CASE("rio_encode output is decode-consistent for every payload") {
    RioCodeSpec spec = toy_spec();
    for (std::uint64_t value = 0; value < 16; ++value) {
        Bits payload(4, value);
        LevelWord word = rio::rio_encode(spec, payload);
        CHECK(rio::rio_read_chunk(spec, word, 1) == payload.slice(0, 2));
        CHECK(rio::rio_read_chunk(spec, word, 2) == payload.slice(2, 2));
        CHECK(rio::rio_decode_all(spec, word) == payload);
    }
}

TEST_CASE("each sense of an encoded word reproduces the wom write states") {
    RioCodeSpec spec = toy_spec();
    for (std::uint64_t value = 0; value < 16; ++value) {
        Bits payload(4, value);
        LevelWord word = rio::rio_encode(spec, payload);

        BinaryCellState state = BinaryCellState::all_erased(3);
        for (int j = 1; j <= 2; ++j) {
            state = rio::wom_encode(spec.wom(), j, payload.slice(2 * (j - 1), 2), state);
            CHECK(rio::sense(word, SenseThreshold{spec.level_count() - j}) == state);

            // Level threshold consistency: level >= M-j exactly for cells
            // programmed by write j or earlier.
            for (int cell = 1; cell <= 3; ++cell)
                CHECK((word.level(cell) >= spec.level_count() - j) == state.programmed(cell));
        }
    }
}

TEST_CASE("read-chunk recovers the published table entries") {
    RioCodeSpec spec = toy_spec();
    CHECK(rio::rio_read_chunk(spec, word3(1, 0, 2), 1) == Bits::from_string("10"));
    CHECK(rio::rio_read_chunk(spec, word3(1, 0, 2), 2) == Bits::from_string("01"));
    CHECK(rio::rio_read_chunk(spec, word3(0, 0, 0), 1) == Bits::from_string("11"));
    CHECK(rio::rio_decode_all(spec, word3(0, 0, 0)) == Bits::from_string("1111"));
    CHECK(rio::rio_decode_all(spec, word3(2, 0, 0)) == Bits::from_string("0000"));
}

TEST_CASE("every published joint-table entry decodes to its labels") {
    RioCodeSpec spec = toy_spec();
    for (std::uint32_t second = 0; second < 4; ++second) {
        for (std::uint32_t first = 0; first < 4; ++first) {
            LevelWord word = parse_entry(kJointTable[second][first]);
            CHECK(rio::rio_read_chunk(spec, word, 1) == InfoWord(2, first));
            CHECK(rio::rio_read_chunk(spec, word, 2) == InfoWord(2, second));
        }
    }
}

TEST_CASE("chunk reads validate their arguments") {
    RioCodeSpec spec = toy_spec();
    CHECK_THROWS_AS(rio::rio_read_chunk(spec, word3(0, 0, 0), 0), rio::IndexOutOfRange);
    CHECK_THROWS_AS(rio::rio_read_chunk(spec, word3(0, 0, 0), 3), rio::IndexOutOfRange);
    CHECK_THROWS_AS(rio::rio_read_chunk(spec, LevelWord(4, {0, 0, 0}), 1),
                    rio::DimensionMismatch);
    CHECK_THROWS_AS(rio::rio_read_chunk(spec, LevelWord(3, {0, 0}), 1), rio::DimensionMismatch);
    CHECK_THROWS_AS(rio::rio_encode(spec, Bits::from_string("000")), rio::DimensionMismatch);
}

TEST_CASE("bits_per_cell is exact") {
    CHECK(rio::bits_per_cell(toy_spec()) == rio::Rational(4, 3));

    auto unit = rio::synthesize_wom_code(1, 1, 1);
    REQUIRE(unit.has_value());
    CHECK(rio::bits_per_cell(RioCodeSpec(*unit)) == rio::Rational(1, 1));

    auto synthesized = rio::synthesize_wom_code(3, 2, 2);
    REQUIRE(synthesized.has_value());
    CHECK(rio::bits_per_cell(RioCodeSpec(*synthesized)) == rio::Rational(4, 3));
}

TEST_CASE("synthesized codes run the full rio pipeline") {
    auto code = rio::synthesize_wom_code(3, 2, 2);
    REQUIRE(code.has_value());
    RioCodeSpec spec(*code);
    for (std::uint64_t value = 0; value < 16; ++value) {
        Bits payload(4, value);
        CHECK(rio::rio_decode_all(spec, rio::rio_encode(spec, payload)) == payload);
    }
}

TEST_CASE("level words validate their contents") {
    CHECK_THROWS_AS(LevelWord(3, {0, 3, 0}), rio::DomainError);
    CHECK_THROWS_AS(LevelWord(3, {0, -1, 0}), rio::DomainError);
    CHECK_THROWS_AS(LevelWord(1, {0}), rio::DomainError);
    CHECK_THROWS_AS(LevelWord(3, {}), rio::DimensionMismatch);
    CHECK_THROWS_AS(word3(0, 0, 0).level(4), rio::IndexOutOfRange);
}

TEST_CASE("level word text format round-trips") {
    LevelWord word = word3(2, 0, 1);
    CHECK(rio::level_word_to_text(word) == "M=3\n2,0,1\n");
    CHECK(rio::level_word_from_text("M=3\n2,0,1\n") == word);
    CHECK(rio::level_word_from_text("M=3\n2,0,1") == word); // no trailing newline

    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        int level_count = 2 + static_cast<int>(rng() % 6);
        std::vector<int> levels(1 + rng() % 8);
        for (int& level : levels)
            level = static_cast<int>(rng() % static_cast<unsigned>(level_count));
        LevelWord sample(level_count, levels);
        CHECK(rio::level_word_from_text(rio::level_word_to_text(sample)) == sample);
    }
}

TEST_CASE("malformed level word text is rejected") {
    CHECK_THROWS_AS(rio::level_word_from_text(""), rio::FormatError);
    CHECK_THROWS_AS(rio::level_word_from_text("2,0,1\n"), rio::FormatError);
    CHECK_THROWS_AS(rio::level_word_from_text("M=x\n2,0,1\n"), rio::FormatError);
    CHECK_THROWS_AS(rio::level_word_from_text("M=3\n"), rio::FormatError);
    CHECK_THROWS_AS(rio::level_word_from_text("M=3\n2,a,1\n"), rio::FormatError);
    CHECK_THROWS_AS(rio::level_word_from_text("M=3\n2,3,1\n"), rio::FormatError);
    CHECK_THROWS_AS(rio::level_word_from_text("M=3\n2,0,1\nextra\n"), rio::FormatError);
}

TEST_CASE("payload hex follows the most-significant-first convention") {
    CHECK(rio::payload_from_hex("0", 4) == Bits::from_string("0000"));
    CHECK(rio::payload_from_hex("0x0", 4) == Bits::from_string("0000"));
    CHECK(rio::payload_from_hex("9", 4) == Bits::from_string("1001"));
    CHECK(rio::payload_from_hex("0xA", 4) == Bits::from_string("1010"));
    CHECK(rio::payload_to_hex(Bits::from_string("1001")) == "9");

    // 6-bit payload: the last digit carries two padding zeros.
    CHECK(rio::payload_from_hex("a8", 6) == Bits::from_string("101010"));
    CHECK(rio::payload_to_hex(Bits::from_string("101010")) == "a8");

    CHECK_THROWS_AS(rio::payload_from_hex("a9", 6), rio::FormatError); // pad bit set
    CHECK_THROWS_AS(rio::payload_from_hex("123", 4), rio::FormatError);
    CHECK_THROWS_AS(rio::payload_from_hex("", 4), rio::FormatError);
    CHECK_THROWS_AS(rio::payload_from_hex("g", 4), rio::FormatError);
}

TEST_CASE("payload hex round-trips random payloads") {
    std::mt19937_64 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        int bits = 1 + static_cast<int>(rng() % 32);
        std::uint64_t value = rng() & ((1ull << bits) - 1);
        Bits payload(bits, value);
        CHECK(rio::payload_from_hex(rio::payload_to_hex(payload), bits) == payload);
    }
}
