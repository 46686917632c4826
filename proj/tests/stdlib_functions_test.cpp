#include "optopla/stdlib_functions.hpp"

#include "gtest/gtest.h"

using namespace optopla;

namespace {

// Pack the (a, b) pair into the operand order (A4..A1, B4..B1).
InputVector operand_bits(std::uint32_t a, std::uint32_t b) {
    return minterm_of_channel(a * 16 + b, 8);
}

std::uint32_t decode(const std::vector<NamedTable>& tables, const InputVector& x) {
    std::uint32_t value = 0;
    for (const NamedTable& nt : tables)
        value = (value << 1) | (nt.table.lookup(x) ? 1 : 0);
    return value;
}

}  // namespace

TEST(Decoder, SingletonTables) {
    const auto tables = decoder_tables(3);
    ASSERT_EQ(tables.size(), 8u);
    EXPECT_EQ(tables[0].name, "Y0");
    EXPECT_EQ(tables[7].name, "Y7");
    for (std::uint32_t k = 0; k < 8; ++k) {
        EXPECT_EQ(tables[k].table.minterm_count(), 1u);
        EXPECT_TRUE(tables[k].table.at(k));
    }
}

TEST(Comparator4, DiagonalIsEquality) {
    const auto tables = comparator4_tables();
    ASSERT_EQ(tables.size(), 3u);
    for (std::uint32_t v = 0; v < 16; ++v) {
        const InputVector x = operand_bits(v, v);
        EXPECT_FALSE(tables[0].table.lookup(x));  // A>B
        EXPECT_TRUE(tables[1].table.lookup(x));   // A=B
        EXPECT_FALSE(tables[2].table.lookup(x));  // A<B
    }
}

TEST(Comparator4, MatchesIntegerComparisonForAllPairs) {
    const auto tables = comparator4_tables();
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b) {
            const InputVector x = operand_bits(a, b);
            EXPECT_EQ(tables[0].table.lookup(x), a > b);
            EXPECT_EQ(tables[1].table.lookup(x), a == b);
            EXPECT_EQ(tables[2].table.lookup(x), a < b);
        }
}

TEST(Adder4, MaxInputs) {
    const auto tables = adder4_tables();
    ASSERT_EQ(tables.size(), 5u);
    EXPECT_EQ(tables[0].name, "O5");
    EXPECT_EQ(tables[4].name, "O1");
    // 15 + 15 = 30 = 11110
    EXPECT_EQ(decode(tables, operand_bits(15, 15)), 30u);
}

TEST(Adder4, MatchesIntegerAdditionForAllPairs) {
    const auto tables = adder4_tables();
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b)
            ASSERT_EQ(decode(tables, operand_bits(a, b)), a + b);
}

TEST(Multiplier4, MaxInputs) {
    const auto tables = multiplier4_tables();
    ASSERT_EQ(tables.size(), 8u);
    EXPECT_EQ(tables[0].name, "O8");
    EXPECT_EQ(tables[7].name, "O1");
    // 15 * 15 = 225 = 11100001
    EXPECT_EQ(decode(tables, operand_bits(15, 15)), 225u);
}

TEST(Multiplier4, MatchesIntegerMultiplicationForAllPairs) {
    const auto tables = multiplier4_tables();
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b)
            ASSERT_EQ(decode(tables, operand_bits(a, b)), a * b);
}

TEST(StdlibDispatch, NamesAndErrors) {
    EXPECT_TRUE(is_stdlib_name("decoder"));
    EXPECT_TRUE(is_stdlib_name("comparator4"));
    EXPECT_FALSE(is_stdlib_name("nand7"));
    EXPECT_EQ(stdlib_function("decoder", 4).size(), 16u);
    EXPECT_EQ(stdlib_function("adder4", 8).size(), 5u);
    EXPECT_EQ(stdlib_function("multiplier4", 8).size(), 8u);
    EXPECT_THROW(stdlib_function("nand7", 8), std::invalid_argument);
    EXPECT_THROW(stdlib_function("comparator4", 9), std::invalid_argument);
    EXPECT_THROW(decoder_tables(17), std::invalid_argument);
}
