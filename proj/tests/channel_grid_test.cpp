#include "optopla/channel_grid.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace optopla;

TEST(ChannelIndex, ZeroAndMaxStates) {
    EXPECT_EQ(channel_index(InputVector(8, 0)), 0u);
    EXPECT_EQ(channel_index(InputVector(8, 1)), 255u);
}

TEST(ChannelIndex, BijectiveOver256States) {
    std::set<std::uint32_t> seen;
    for (std::uint32_t c = 0; c < 256; ++c)
        seen.insert(channel_index(minterm_of_channel(c, 8)));
    EXPECT_EQ(seen.size(), 256u);
    EXPECT_EQ(*seen.begin(), 0u);
    EXPECT_EQ(*seen.rbegin(), 255u);
}

TEST(ChannelIndex, Stage1IsMostSignificant) {
    InputVector x(8, 0);
    x[0] = 1;  // operand 1
    EXPECT_EQ(channel_index(x), 128u);
    x.assign(8, 0);
    x[7] = 1;  // operand 8
    EXPECT_EQ(channel_index(x), 1u);
}

TEST(ChannelIndex, RejectsBadBitsAndLength) {
    EXPECT_THROW(channel_index(InputVector{}), std::invalid_argument);
    EXPECT_THROW(channel_index(InputVector(21, 0)), std::invalid_argument);
    EXPECT_THROW(channel_index(InputVector{0, 2, 1}), std::invalid_argument);
}

TEST(MintermOfChannel, SmallCases) {
    EXPECT_EQ(minterm_of_channel(0, 3), (InputVector{0, 0, 0}));
    EXPECT_EQ(minterm_of_channel(7, 3), (InputVector{1, 1, 1}));
    EXPECT_EQ(minterm_of_channel(5, 3), (InputVector{1, 0, 1}));
}

TEST(MintermOfChannel, RoundTripExhaustiveThrough9) {
    for (int n = 1; n <= 9; ++n)
        for (std::uint32_t c = 0; c < (1u << n); ++c)
            EXPECT_EQ(channel_index(minterm_of_channel(c, n)), c);
}

TEST(MintermOfChannel, RoundTripSampledUpTo20) {
    std::mt19937 rng(7);
    for (int n = 10; n <= 20; ++n) {
        std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n) - 1);
        for (int trial = 0; trial < 512; ++trial) {
            const std::uint32_t c = dist(rng);
            EXPECT_EQ(channel_index(minterm_of_channel(c, n)), c);
        }
        EXPECT_EQ(channel_index(minterm_of_channel((1u << n) - 1, n)), (1u << n) - 1);
    }
}

TEST(MintermOfChannel, RangeErrors) {
    EXPECT_THROW(minterm_of_channel(8, 3), std::out_of_range);
    EXPECT_THROW(minterm_of_channel(0, 0), std::invalid_argument);
    EXPECT_THROW(minterm_of_channel(0, 21), std::invalid_argument);
}

TEST(PlusSet, Stage1IsUpperHalf) {
    const ChannelMask m = plus_set(1, 3);
    EXPECT_EQ(m.set_channels(), (std::vector<std::size_t>{4, 5, 6, 7}));
}

TEST(PlusSet, LastStageAlternatesSingleChannels) {
    const ChannelMask m = plus_set(3, 3);
    EXPECT_EQ(m.set_channels(), (std::vector<std::size_t>{1, 3, 5, 7}));
}

TEST(PlusSet, HalfTheChannelsPassAtEveryStage) {
    for (int n = 1; n <= 10; ++n)
        for (int j = 1; j <= n; ++j)
            EXPECT_EQ(plus_set(j, n).popcount(), std::size_t{1} << (n - 1));
}

TEST(PlusSet, SquareWaveBlockSizeHalvesStageToStage) {
    const int n = 6;
    for (int j = 1; j <= n; ++j) {
        const ChannelMask m = plus_set(j, n);
        const std::size_t block = std::size_t{1} << (n - j);
        // channels come in alternating all-0 / all-1 blocks starting with 0s
        for (std::size_t c = 0; c < m.size(); ++c)
            EXPECT_EQ(m.test(c), (c / block) % 2 == 1) << "stage " << j << " channel " << c;
    }
}

TEST(PlusSet, StageOutOfRange) {
    EXPECT_THROW(plus_set(0, 3), std::out_of_range);
    EXPECT_THROW(plus_set(4, 3), std::out_of_range);
    EXPECT_THROW(plus_set(1, 21), std::invalid_argument);
}

// For every input vector the stagewise pass/complement choices intersect to
// exactly the one channel carrying that minterm.
TEST(PlusSet, SingleLitChannelPropertyExhaustive) {
    for (int n = 1; n <= 9; ++n) {
        std::vector<ChannelMask> plus;
        for (int j = 1; j <= n; ++j)
            plus.push_back(plus_set(j, n));
        for (std::uint32_t state = 0; state < (1u << n); ++state) {
            const InputVector x = minterm_of_channel(state, n);
            ChannelMask acc(std::size_t{1} << n, true);
            for (int j = 0; j < n; ++j)
                acc = acc & (x[static_cast<std::size_t>(j)] ? plus[static_cast<std::size_t>(j)]
                                                            : plus[static_cast<std::size_t>(j)]
                                                                  .complemented());
            ASSERT_EQ(acc.popcount(), 1u);
            EXPECT_TRUE(acc.test(channel_index(x)));
        }
    }
}

// Any partial assignment of k stages leaves exactly 2^(n-k) candidates.
TEST(PlusSet, StageMasksAreIndependent) {
    std::mt19937 rng(11);
    const int n = 8;
    for (int trial = 0; trial < 50; ++trial) {
        const int k = static_cast<int>(rng() % n) + 1;
        ChannelMask acc(std::size_t{1} << n, true);
        for (int j = 1; j <= k; ++j) {
            const ChannelMask m = plus_set(j, n);
            acc = acc & (rng() % 2 ? m : m.complemented());
        }
        EXPECT_EQ(acc.popcount(), std::size_t{1} << (n - k));
    }
}

TEST(ChannelMask, ComplementIsInvolution) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        ChannelMask m(64);
        for (std::size_t c = 0; c < 64; ++c)
            m.set(c, rng() % 2);
        EXPECT_EQ(m.complemented().complemented(), m);
        EXPECT_EQ(m.popcount() + m.complemented().popcount(), 64u);
    }
}

TEST(ChannelMask, HexUsesLsbAsChannelZero) {
    ChannelMask m(4);
    m.set(3);
    EXPECT_EQ(m.to_hex(), "8");
    EXPECT_EQ(plus_set(1, 3).to_hex(), "f0");
    EXPECT_EQ(plus_set(3, 3).to_hex(), "aa");
}

TEST(ChannelMask, HexWidthIsQuarterOfChannels) {
    EXPECT_EQ(ChannelMask(256).to_hex().size(), 64u);
    EXPECT_EQ(ChannelMask(8).to_hex().size(), 2u);
    EXPECT_EQ(ChannelMask(2).to_hex().size(), 1u);
}

TEST(ChannelMask, HexRoundTrip) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        ChannelMask m(256);
        for (std::size_t c = 0; c < 256; ++c)
            m.set(c, rng() % 2);
        EXPECT_EQ(ChannelMask::from_hex(m.to_hex(), 256), m);
    }
}

TEST(ChannelMask, FromHexRejectsBadInput) {
    EXPECT_THROW(ChannelMask::from_hex("8", 8), std::invalid_argument);     // too short
    EXPECT_THROW(ChannelMask::from_hex("008", 8), std::invalid_argument);   // too long
    EXPECT_THROW(ChannelMask::from_hex("0g", 8), std::invalid_argument);    // bad digit
    EXPECT_THROW(ChannelMask::from_hex("4", 2), std::invalid_argument);     // pad bit set
    EXPECT_NO_THROW(ChannelMask::from_hex("3", 2));
    EXPECT_EQ(ChannelMask::from_hex("FF", 8), ChannelMask(8, true));  // upper case accepted
}

TEST(ChannelMask, LengthMismatchOnIntersect) {
    EXPECT_THROW(ChannelMask(8) & ChannelMask(16), std::invalid_argument);
}

TEST(WavelengthGrid, WavelengthsIncreaseWithIndex) {
    const WavelengthGrid g{256, 1530.0, 0.15};
    g.validate();
    EXPECT_DOUBLE_EQ(g.wavelength_nm(0), 1530.0);
    EXPECT_DOUBLE_EQ(g.wavelength_nm(255), 1530.0 + 255 * 0.15);
    for (std::size_t c = 1; c < 256; ++c)
        EXPECT_GT(g.wavelength_nm(c), g.wavelength_nm(c - 1));
}

TEST(WavelengthGrid, ValidationErrors) {
    EXPECT_THROW((WavelengthGrid{0, 1530.0, 0.15}).validate(), std::invalid_argument);
    EXPECT_THROW((WavelengthGrid{256, -1.0, 0.15}).validate(), std::invalid_argument);
    EXPECT_THROW((WavelengthGrid{256, 1530.0, 0.0}).validate(), std::invalid_argument);
    EXPECT_THROW((WavelengthGrid{std::size_t{1} << 21, 1530.0, 0.15}).validate(),
                 std::invalid_argument);
}

TEST(InputVector, StringConversionRoundTrip) {
    const InputVector x = input_from_string("10010011");
    EXPECT_EQ(channel_index(x), 147u);
    EXPECT_EQ(input_to_string(x), "10010011");
    EXPECT_THROW(input_from_string("10x1"), std::invalid_argument);
    EXPECT_THROW(input_from_string(""), std::invalid_argument);
}
