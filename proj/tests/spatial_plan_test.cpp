#include "optopla/spatial_plan.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "optopla/life.hpp"

using namespace optopla;

namespace {

TruthTable random_table(std::mt19937& rng, int n) {
    TruthTable tt;
    tt.input_count = n;
    tt.outputs.resize(std::size_t{1} << n);
    for (std::size_t c = 0; c < tt.outputs.size(); ++c)
        tt.outputs[c] = rng() % 2;
    return tt;
}

}  // namespace

TEST(PlanSpatial, NineInputsGiveTwoPorts) {
    std::mt19937 rng(301);
    const SpatialPlan plan = plan_spatial(9, 8, {{"f", random_table(rng, 9)}});
    EXPECT_EQ(plan.wavelength_operands, 8);
    EXPECT_EQ(plan.spatial_operands, 1);
    EXPECT_EQ(plan.port_count, 2);
    ASSERT_EQ(plan.port_assignment.size(), 2u);
    // port 1 is the upper switch output, carrying minterms with operand 9 = 1
    EXPECT_EQ(plan.port_assignment[0], (InputVector{0}));
    EXPECT_EQ(plan.port_assignment[1], (InputVector{1}));
    EXPECT_EQ(plan.outputs[0].port_masks.size(), 2u);
    EXPECT_EQ(plan.outputs[0].port_masks[0].size(), 256u);
}

TEST(PlanSpatial, FourInputsOverTwoWavelengthsGiveSixteenCells) {
    std::mt19937 rng(303);
    const SpatialPlan plan = plan_spatial(4, 2, {{"f", random_table(rng, 4)}});
    EXPECT_EQ(plan.port_count, 4);
    EXPECT_EQ(plan.outputs[0].port_masks.size(), 4u);
    for (const ChannelMask& m : plan.outputs[0].port_masks)
        EXPECT_EQ(m.size(), 4u);
}

// Every (port, channel) cell addresses exactly one global minterm.
TEST(PlanSpatial, CellsTileTheMintermSpaceExactlyOnce) {
    std::mt19937 rng(305);
    for (const auto& [n_tot, n_w] : {std::pair{4, 2}, std::pair{9, 8}, std::pair{6, 3}}) {
        const SpatialPlan plan =
            plan_spatial(n_tot, n_w, {{"f", random_table(rng, n_tot)}});
        std::set<std::uint32_t> seen;
        for (std::uint32_t p = 0; p < static_cast<std::uint32_t>(plan.port_count); ++p)
            for (std::uint32_t c = 0; c < (1u << n_w); ++c)
                seen.insert(global_minterm(plan, c, p));
        EXPECT_EQ(seen.size(), std::size_t{1} << n_tot);
        EXPECT_EQ(*seen.rbegin(), (1u << n_tot) - 1);
    }
}

TEST(PlanSpatial, LookupEqualsDirectTableLookupForAll512Inputs) {
    std::mt19937 rng(307);
    const TruthTable tt = random_table(rng, 9);
    const SpatialPlan plan = plan_spatial(9, 8, {{"f", tt}});
    for (std::uint32_t state = 0; state < 512; ++state) {
        const InputVector x = minterm_of_channel(state, 9);
        ASSERT_EQ(plan_lookup(plan, 0, x), tt.at(state)) << "state " << state;
    }
}

TEST(PlanSpatial, ConwayTableThroughPlanMatchesDirectLookup) {
    const TruthTable conway = conway_truth_table();
    const SpatialPlan plan = plan_spatial(9, 8, {{"next", conway}});
    for (std::uint32_t state = 0; state < 512; ++state)
        ASSERT_EQ(plan_lookup(plan, 0, minterm_of_channel(state, 9)), conway.at(state));
}

TEST(PlanSpatial, FourInputWorkedExample) {
    // f(x1..x4) with x3, x4 spatial: port p must see the minterms whose low
    // two bits equal p.
    std::mt19937 rng(311);
    const TruthTable tt = random_table(rng, 4);
    const SpatialPlan plan = plan_spatial(4, 2, {{"f", tt}});
    for (std::uint32_t state = 0; state < 16; ++state) {
        const InputVector x = minterm_of_channel(state, 4);
        const std::uint32_t channel = state >> 2;
        const std::uint32_t port = state & 3;
        EXPECT_EQ(plan.outputs[0].port_masks[port].test(channel), tt.at(state));
        EXPECT_EQ(plan_lookup(plan, 0, x), tt.at(state));
    }
}

TEST(PlanSpatial, MultipleOutputsKeepTheirNames) {
    std::mt19937 rng(313);
    const SpatialPlan plan = plan_spatial(
        4, 2, {{"first", random_table(rng, 4)}, {"second", random_table(rng, 4)}});
    ASSERT_EQ(plan.outputs.size(), 2u);
    EXPECT_EQ(plan.outputs[0].name, "first");
    EXPECT_EQ(plan.outputs[1].name, "second");
}

TEST(PlanSpatial, Errors) {
    std::mt19937 rng(317);
    const TruthTable t9 = random_table(rng, 9);
    EXPECT_THROW(plan_spatial(8, 8, {{"f", t9}}), std::invalid_argument);
    EXPECT_THROW(plan_spatial(9, 0, {{"f", t9}}), std::invalid_argument);
    EXPECT_THROW(plan_spatial(9, 8, {{"f", random_table(rng, 8)}}), std::invalid_argument);
    EXPECT_THROW(plan_lookup(plan_spatial(9, 8, {{"f", t9}}), 0, InputVector(8, 0)),
                 std::invalid_argument);
}
