#include <gtest/gtest.h>

#include "collatz/bitstring.hpp"
#include "collatz/numeric.hpp"

using namespace collatz;

TEST(Interpret, IgnoresLeadingZeros) {
    EXPECT_EQ(interpret(BitString("11")), 3);
    EXPECT_EQ(interpret(BitString("0011")), 3);
    EXPECT_EQ(interpret(BitString()), 0);
}

TEST(Interpret, HandlesWordsFarBeyondMachineWidth) {
    const BitString w = BitString("1") + BitString::zeros(300);
    EXPECT_EQ(interpret(w), pow2(300));
    EXPECT_EQ(interpret(BitString::ones(130)), pow2(130) - 1);
}

TEST(InterpretInverse, FixedWidth) {
    EXPECT_EQ(interpret_inv_n(3, 7), BitString("0000011"));
    EXPECT_EQ(interpret_inv_n(3, 2), BitString("11"));
    EXPECT_EQ(interpret_inv_n(0, 0), BitString());
}

TEST(InterpretInverse, RejectsTooFewBits) {
    EXPECT_THROW(interpret_inv_n(4, 2), std::domain_error);
    EXPECT_THROW(interpret_inv_n(1, 0), std::domain_error);
}

TEST(InterpretInverse, Minimal) {
    EXPECT_EQ(interpret_inv_min(3), BitString("11"));
    EXPECT_EQ(interpret_inv_min(0), BitString("0"));
    EXPECT_EQ(interpret_inv_min(14), BitString("1110"));
}

TEST(InterpretInverse, RoundTripsEveryWordUpToTenBits) {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (unsigned m = 0; m < (1U << n); ++m) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += ((m >> (n - 1 - i)) & 1) ? '1' : '0';
            const BitString w(s);
            EXPECT_EQ(interpret_inv_n(interpret(w), n), w);
            EXPECT_EQ(interpret(BitString("0") + w), interpret(w));
        }
    }
}

TEST(Rotate, MovesTrailingSymbolsToTheFront) {
    EXPECT_EQ(rotate_right(BitString("000111"), 2), BitString("110001"));
    EXPECT_EQ(rotate_right(BitString("000111"), 0), BitString("000111"));
    EXPECT_EQ(rotate_right(BitString("000010010111101101"), 1), BitString("100001001011110110"));
}

TEST(Rotate, RejectsOutOfRange) {
    EXPECT_THROW(rotate_right(BitString("01"), 2), std::domain_error);
    EXPECT_THROW(rotate_right(BitString(), 0), std::domain_error);
}

TEST(Rotate, ComposesAdditively) {
    const BitString w("0010111011");
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            EXPECT_EQ(rotate_right(rotate_right(w, i), j), rotate_right(w, (i + j) % w.size()));
        }
    }
}

TEST(BitStringText, RejectsForeignSymbolsByPosition) {
    try {
        BitString("0120");
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("'2' at position 2"), std::string::npos);
    }
}

TEST(BitStringText, CliForms) {
    EXPECT_EQ(to_cli_string(BitString()), "eps");
    EXPECT_EQ(parse_cli_bits("eps"), BitString());
    EXPECT_EQ(parse_cli_bits("0101"), BitString("0101"));
    EXPECT_THROW(parse_cli_bits("01a"), std::invalid_argument);
}

TEST(BitStringOrder, ShortlexThenLexicographic) {
    EXPECT_LT(BitString("1"), BitString("00"));
    EXPECT_LT(BitString("01"), BitString("10"));
    EXPECT_LT(BitString(), BitString("0"));
}

TEST(BitStringHelpers, ComplementAndReverse) {
    EXPECT_EQ(complement(BitString("0011")), BitString("1100"));
    EXPECT_EQ(reversed(BitString("0011")), BitString("1100"));
    EXPECT_EQ(reversed(BitString("011")), BitString("110"));
}

TEST(Numeric, ParseNatural) {
    EXPECT_EQ(parse_natural("1048576"), pow2(20));
    EXPECT_EQ(parse_natural("123456789012345678901234567890").str(), "123456789012345678901234567890");
    EXPECT_THROW(parse_natural("-3"), std::invalid_argument);
    EXPECT_THROW(parse_natural("12x"), std::invalid_argument);
    EXPECT_THROW(parse_natural(""), std::invalid_argument);
}

TEST(Numeric, PowersAndBitLength) {
    EXPECT_EQ(pow3(0), 1);
    EXPECT_EQ(pow3(4), 81);
    EXPECT_EQ(pow3(40).str(), "12157665459056928801");
    EXPECT_EQ(bit_length(0), 0U);
    EXPECT_EQ(bit_length(14), 4U);
}
