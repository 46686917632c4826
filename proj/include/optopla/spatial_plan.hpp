#pragma once

// Wavelength + space expansion: operands beyond the grid's capacity drive a
// depth-d binary switch tree, giving 2^d spatial ports. Port p carries the
// wavelength minterms conjoined with the literal pattern encoded by p, so the
// (port, channel) cells tile all 2^(N_tot) global minterms exactly once.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "optopla/channel_grid.hpp"
#include "optopla/stdlib_functions.hpp"
#include "optopla/truth_table.hpp"

namespace optopla {

struct SpatialPlanOutput {
    std::string name;
    std::vector<ChannelMask> port_masks;  // one mask per port
};

struct SpatialPlan {
    int wavelength_operands = 0;  // N_w, on the SM cascade
    int spatial_operands = 0;     // d, on the switch tree
    int port_count = 0;           // 2^d
    // port_assignment[p] = d-bit values of operands N_w+1..N_w+d, MSB first;
    // ports are ordered by that encoded value, so port_assignment[p] encodes p.
    std::vector<InputVector> port_assignment;
    std::vector<SpatialPlanOutput> outputs;

    int total_operands() const { return wavelength_operands + spatial_operands; }
};

// Spatial operands take the least significant minterm positions, so the
// global minterm of (port p, channel c) is c * 2^d + p.
inline std::uint32_t global_minterm(const SpatialPlan& plan, std::uint32_t channel,
                                    std::uint32_t port) {
    return (channel << plan.spatial_operands) | port;
}

inline SpatialPlan plan_spatial(int total_operands, int wavelength_operands,
                                const std::vector<NamedTable>& functions) {
    if (wavelength_operands < 1)
        throw std::invalid_argument("plan_spatial: need at least one wavelength operand");
    if (total_operands <= wavelength_operands)
        throw std::invalid_argument("plan_spatial: total operands must exceed wavelength operands");
    if (total_operands > kMaxOperands)
        throw std::invalid_argument("plan_spatial: operand count exceeds 20");

    SpatialPlan plan;
    plan.wavelength_operands = wavelength_operands;
    plan.spatial_operands = total_operands - wavelength_operands;
    plan.port_count = 1 << plan.spatial_operands;

    for (std::uint32_t p = 0; p < static_cast<std::uint32_t>(plan.port_count); ++p)
        plan.port_assignment.push_back(
            minterm_of_channel(p, plan.spatial_operands));

    const std::size_t total_minterms = std::size_t{1} << total_operands;
    const std::size_t channels = std::size_t{1} << wavelength_operands;
    for (const NamedTable& fn : functions) {
        if (fn.table.input_count != total_operands ||
            fn.table.outputs.size() != total_minterms)
            throw std::invalid_argument("plan_spatial: table '" + fn.name + "' is not over " +
                                        std::to_string(total_operands) + " operands");
        SpatialPlanOutput out;
        out.name = fn.name;
        for (std::uint32_t p = 0; p < static_cast<std::uint32_t>(plan.port_count); ++p) {
            ChannelMask mask(channels);
            for (std::uint32_t c = 0; c < channels; ++c)
                mask.set(c, fn.table.at(global_minterm(plan, c, p)));
            out.port_masks.push_back(std::move(mask));
        }
        plan.outputs.push_back(std::move(out));
    }
    return plan;
}

// Logical evaluation through the plan: route by the spatial bits, then look
// the wavelength channel up in that port's mask.
inline bool plan_lookup(const SpatialPlan& plan, std::size_t output_index,
                        const InputVector& x) {
    if (static_cast<int>(x.size()) != plan.total_operands())
        throw std::invalid_argument("plan_lookup: operand count mismatch");
    const InputVector wavelength_bits(x.begin(), x.begin() + plan.wavelength_operands);
    const InputVector spatial_bits(x.begin() + plan.wavelength_operands, x.end());
    const std::uint32_t channel = channel_index(wavelength_bits);
    const std::uint32_t port = channel_index(spatial_bits);
    return plan.outputs.at(output_index).port_masks.at(port).test(channel);
}

}  // namespace optopla
