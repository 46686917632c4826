#pragma once

// Full device-chain description: the SM cascade implied by the grid, device
// parameters, an optional spatial switch tree, and the per-output waveshaper
// masks (one per spatial port).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "optopla/channel_grid.hpp"
#include "optopla/devices.hpp"
#include "optopla/spatial_plan.hpp"
#include "optopla/stdlib_functions.hpp"

namespace optopla {

struct OutputSpec {
    std::string name;
    std::vector<ChannelMask> port_masks;  // size 1 without a spatial tree, else 2^d
};

struct PlaConfig {
    int operand_count = 0;
    WavelengthGrid grid;
    DeviceParams params;
    std::vector<OutputSpec> outputs;

    int wavelength_operands() const {
        if (grid.channel_count == 0 || !std::has_single_bit(grid.channel_count))
            throw std::invalid_argument("PlaConfig: grid channel_count must be a power of two");
        return std::bit_width(grid.channel_count) - 1;
    }

    int spatial_operands() const { return operand_count - wavelength_operands(); }

    int port_count() const { return 1 << spatial_operands(); }

    void validate() const {
        grid.validate();
        params.validate();
        const int n_w = wavelength_operands();
        if (n_w < 1)
            throw std::invalid_argument("PlaConfig: need at least two wavelength channels");
        if (operand_count < n_w || operand_count > kMaxOperands)
            throw std::invalid_argument("PlaConfig: operand_count " +
                                        std::to_string(operand_count) +
                                        " inconsistent with a " +
                                        std::to_string(grid.channel_count) + "-channel grid");
        const std::size_t ports = std::size_t{1} << (operand_count - n_w);
        for (const OutputSpec& out : outputs) {
            if (out.port_masks.size() != ports)
                throw std::invalid_argument("PlaConfig: output '" + out.name + "' needs " +
                                            std::to_string(ports) + " masks, has " +
                                            std::to_string(out.port_masks.size()));
            for (const ChannelMask& m : out.port_masks)
                if (m.size() != grid.channel_count)
                    throw std::invalid_argument("PlaConfig: mask length mismatch in output '" +
                                                out.name + "'");
        }
    }

    // Expected logic value of an output: the masks are the truth table.
    bool expected_output(std::size_t output_index, const InputVector& x) const {
        const int n_w = wavelength_operands();
        const InputVector wavelength_bits(x.begin(), x.begin() + n_w);
        const std::uint32_t channel = channel_index(wavelength_bits);
        std::uint32_t port = 0;
        if (static_cast<int>(x.size()) > n_w) {
            const InputVector spatial_bits(x.begin() + n_w, x.end());
            port = channel_index(spatial_bits);
        }
        return outputs.at(output_index).port_masks.at(port).test(channel);
    }
};

// The experimental layout: 256 channels at 0.15 nm spacing in the C band.
inline WavelengthGrid default_grid() { return WavelengthGrid{256, 1530.0, 0.15}; }

// Build a configuration for a bundle of N-input functions. Operands beyond
// the grid's wavelength capacity go to the spatial switch tree.
inline PlaConfig make_pla_config(int operand_count, const std::vector<NamedTable>& functions,
                                 const WavelengthGrid& grid = default_grid(),
                                 const DeviceParams& params = DeviceParams{}) {
    PlaConfig cfg;
    cfg.operand_count = operand_count;
    cfg.grid = grid;
    cfg.params = params;
    const int n_w = cfg.wavelength_operands();
    if (operand_count == n_w) {
        for (const NamedTable& fn : functions) {
            if (fn.table.input_count != operand_count)
                throw std::invalid_argument("make_pla_config: table '" + fn.name +
                                            "' operand count mismatch");
            cfg.outputs.push_back({fn.name, {compile_mask(fn.table)}});
        }
    } else {
        SpatialPlan plan = plan_spatial(operand_count, n_w, functions);
        for (SpatialPlanOutput& out : plan.outputs)
            cfg.outputs.push_back({std::move(out.name), std::move(out.port_masks)});
    }
    cfg.validate();
    return cfg;
}

}  // namespace optopla
