#include "optopla/truth_table.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"

using namespace optopla;

TEST(CompileMask, MaskIsTheTableInChannelOrder) {
    TruthTable tt;
    tt.input_count = 3;
    tt.outputs = {true, false, false, true, false, true, true, false};
    const ChannelMask m = compile_mask(tt);
    for (std::uint32_t c = 0; c < 8; ++c)
        EXPECT_EQ(m.test(c), tt.at(c));
}

TEST(CompileMask, DecoderOutputIsSingleton) {
    TruthTable tt;
    tt.input_count = 8;
    tt.outputs.assign(256, false);
    tt.outputs[37] = true;
    const ChannelMask m = compile_mask(tt);
    EXPECT_EQ(m.popcount(), 1u);
    EXPECT_TRUE(m.test(37));
}

TEST(CompileMask, ConstantOneIsFullMask) {
    TruthTable tt;
    tt.input_count = 4;
    tt.outputs.assign(16, true);
    EXPECT_EQ(compile_mask(tt), ChannelMask(16, true));
}

// Oracle: count the (a, b) pairs with a > b over 16x16 by brute force.
TEST(CompileMask, Comparator4GreaterHas120Minterms) {
    std::size_t expected = 0;
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b)
            if (a > b)
                ++expected;
    EXPECT_EQ(expected, 120u);

    TruthTable tt;
    tt.input_count = 8;
    tt.outputs.resize(256);
    for (std::uint32_t c = 0; c < 256; ++c) {
        const InputVector x = minterm_of_channel(c, 8);
        const std::uint32_t a = channel_index(InputVector(x.begin(), x.begin() + 4));
        const std::uint32_t b = channel_index(InputVector(x.begin() + 4, x.end()));
        tt.outputs[c] = a > b;
    }
    EXPECT_EQ(compile_mask(tt).popcount(), expected);
}

TEST(CompileMask, RejectsMalformedTables) {
    TruthTable tt;
    tt.input_count = 3;
    tt.outputs.assign(7, false);
    EXPECT_THROW(compile_mask(tt), std::invalid_argument);
    tt.input_count = 0;
    tt.outputs.assign(1, false);
    EXPECT_THROW(compile_mask(tt), std::invalid_argument);
}

TEST(TableFile, WriteMatchesDocumentedFormat) {
    TruthTable tt;
    tt.input_count = 2;
    tt.outputs = {false, false, false, true};  // A & B
    EXPECT_EQ(table_to_string(tt), "N=2\n8\n");
}

TEST(TableFile, RoundTrip) {
    std::mt19937 rng(211);
    for (int n : {2, 3, 8}) {
        TruthTable tt;
        tt.input_count = n;
        tt.outputs.resize(std::size_t{1} << n);
        for (std::size_t c = 0; c < tt.outputs.size(); ++c)
            tt.outputs[c] = rng() % 2;
        EXPECT_EQ(table_from_string(table_to_string(tt)), tt);
    }
}

TEST(TableFile, ReadRejectsMalformedInput) {
    EXPECT_THROW(table_from_string(""), std::runtime_error);
    EXPECT_THROW(table_from_string("M=2\n8\n"), std::runtime_error);
    EXPECT_THROW(table_from_string("N=2x\n8\n"), std::runtime_error);
    EXPECT_THROW(table_from_string("N=0\n8\n"), std::runtime_error);
    EXPECT_THROW(table_from_string("N=25\nff\n"), std::runtime_error);
    EXPECT_THROW(table_from_string("N=2\n"), std::runtime_error);
    EXPECT_THROW(table_from_string("N=2\n88\n"), std::invalid_argument);  // wrong width
    EXPECT_THROW(table_from_string("N=2\nzz\n"), std::invalid_argument);
}

TEST(TableFile, AcceptsCarriageReturns) {
    const TruthTable tt = table_from_string("N=2\r\n8\r\n");
    EXPECT_EQ(tt.input_count, 2);
    EXPECT_TRUE(tt.at(3));
}

TEST(TableFromMask, LookupAgreesWithOutputs) {
    TruthTable tt;
    tt.input_count = 3;
    tt.outputs = {true, false, true, false, false, true, false, true};
    const TruthTable back = table_from_mask(compile_mask(tt), 3);
    EXPECT_EQ(back, tt);
    EXPECT_TRUE(tt.lookup(InputVector{0, 0, 0}));
    EXPECT_FALSE(tt.lookup(InputVector{0, 0, 1}));
    EXPECT_THROW(tt.lookup(InputVector{0, 0}), std::invalid_argument);
}
