#pragma once

// Per-channel power models of the optical elements in the chain: spectral
// modulator stages, the mid-chain EDFA, waveshaper, spatial switch, coupler
// and photodetector. Powers are carried linear in mW; dB only appears at the
// parameter and reporting interfaces.

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "optopla/channel_grid.hpp"

namespace optopla {

// Per-channel linear optical power in mW, aligned with a WavelengthGrid.
using SpectrumState = std::vector<double>;

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

inline double mw_to_dbm(double mw) {
    if (mw <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(mw);
}

// Multiplicative factor of a loss expressed in dB.
inline double attenuation_factor(double loss_db) { return std::pow(10.0, -loss_db / 10.0); }

struct DeviceParams {
    double source_power = 0.0;       // dBm per channel
    double sm_insertion_loss = 4.0;  // dB per SM stage (and per spatial switch)
    double stage_extinction = 25.0;  // dB suppression of blocked channels
    double edfa_gain = 16.0;         // dB
    int edfa_position = 4;           // EDFA sits after this SM stage
    double ase_floor_long = -45.0;   // dBm ASE at the longest wavelength
    double ase_floor_short = -35.0;  // dBm ASE at the shortest wavelength
    double ws_insertion_loss = 5.0;  // dB
    bool ideal_mode = false;         // zero losses, infinite extinction, no ASE

    void validate() const {
        if (stage_extinction <= 0.0)
            throw std::invalid_argument("DeviceParams: stage_extinction must be > 0 dB");
        if (ase_floor_short < ase_floor_long)
            throw std::invalid_argument(
                "DeviceParams: ase_floor_short must be >= ase_floor_long (dBm)");
    }

    // Linear pass/block factors of one SM stage or spatial switch branch.
    double pass_factor() const {
        return ideal_mode ? 1.0 : attenuation_factor(sm_insertion_loss);
    }
    double block_factor() const {
        return ideal_mode ? 0.0 : attenuation_factor(sm_insertion_loss + stage_extinction);
    }
    double ws_factor() const { return ideal_mode ? 1.0 : attenuation_factor(ws_insertion_loss); }

    bool operator==(const DeviceParams&) const = default;
};

// One spectral modulator: a WSS splitting the spectrum into '+'/'-' halves
// plus a 2x1 switch picking one of them. plus_mask must be
// plus_set(stage_index, N) of the owning configuration.
struct SpectralModulatorStage {
    int stage_index = 0;
    ChannelMask plus_mask;

    static SpectralModulatorStage for_stage(int stage_index, int operand_count) {
        return SpectralModulatorStage{stage_index, plus_set(stage_index, operand_count)};
    }
};

inline void require_length(const SpectrumState& s, std::size_t want, const char* who) {
    if (s.size() != want)
        throw std::invalid_argument(std::string(who) + ": spectrum length " +
                                    std::to_string(s.size()) + " does not match " +
                                    std::to_string(want));
}

// Continuous-drive SM transmission: drive 1.0 selects the '+' set, 0.0 the
// complement, in-between values interpolate the two branch transmissions
// (the switch is the only time-varying element in the chain).
inline SpectrumState apply_sm_analog(const SpectrumState& s, const SpectralModulatorStage& stage,
                                     double drive, const DeviceParams& p) {
    require_length(s, stage.plus_mask.size(), "apply_sm");
    const double pass = p.pass_factor();
    const double block = p.block_factor();
    const double plus_factor = drive * pass + (1.0 - drive) * block;
    const double minus_factor = drive * block + (1.0 - drive) * pass;
    SpectrumState out(s.size());
    for (std::size_t c = 0; c < s.size(); ++c)
        out[c] = s[c] * (stage.plus_mask.test(c) ? plus_factor : minus_factor);
    return out;
}

// Switch set to logic `bit`: the selected half keeps the insertion loss, the
// other half additionally takes the stage extinction (exactly zero when ideal).
inline SpectrumState apply_sm(const SpectrumState& s, const SpectralModulatorStage& stage,
                              int bit, const DeviceParams& p) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("apply_sm: bit must be 0 or 1");
    return apply_sm_analog(s, stage, static_cast<double>(bit), p);
}

// Gain on every channel, then the additive ASE floor: linear interpolation in
// dBm from ase_floor_short at the shortest wavelength to ase_floor_long at
// the longest. No-op in ideal mode.
inline SpectrumState apply_edfa(const SpectrumState& s, const WavelengthGrid& grid,
                                const DeviceParams& p) {
    require_length(s, grid.channel_count, "apply_edfa");
    if (p.ideal_mode)
        return s;
    const double gain = std::pow(10.0, p.edfa_gain / 10.0);
    const std::size_t n = grid.channel_count;
    SpectrumState out(n);
    for (std::size_t c = 0; c < n; ++c) {
        const double t = n > 1 ? static_cast<double>(c) / static_cast<double>(n - 1) : 0.0;
        const double ase_dbm = p.ase_floor_short + t * (p.ase_floor_long - p.ase_floor_short);
        out[c] = s[c] * gain + dbm_to_mw(ase_dbm);
    }
    return out;
}

// Programmable filter assembling the selected minterms (the OR plane). Passed
// channels take the WS insertion loss; blocked channels are fully suppressed.
inline SpectrumState apply_waveshaper(const SpectrumState& s, const ChannelMask& mask,
                                      const DeviceParams& p) {
    require_length(s, mask.size(), "apply_waveshaper");
    const double pass = p.ws_factor();
    SpectrumState out(s.size());
    for (std::size_t c = 0; c < s.size(); ++c)
        out[c] = mask.test(c) ? s[c] * pass : 0.0;
    return out;
}

// 1x2 switch in the spatial dimension with a continuous drive level; drive
// 1.0 routes to the upper port.
inline std::pair<SpectrumState, SpectrumState> apply_spatial_switch_analog(
    const SpectrumState& s, double drive, const DeviceParams& p) {
    const double pass = p.pass_factor();
    const double block = p.block_factor();
    const double upper_factor = drive * pass + (1.0 - drive) * block;
    const double lower_factor = drive * block + (1.0 - drive) * pass;
    SpectrumState upper(s.size());
    SpectrumState lower(s.size());
    for (std::size_t c = 0; c < s.size(); ++c) {
        upper[c] = s[c] * upper_factor;
        lower[c] = s[c] * lower_factor;
    }
    return {std::move(upper), std::move(lower)};
}

inline std::pair<SpectrumState, SpectrumState> apply_spatial_switch(const SpectrumState& s,
                                                                    int bit,
                                                                    const DeviceParams& p) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("apply_spatial_switch: bit must be 0 or 1");
    return apply_spatial_switch_analog(s, static_cast<double>(bit), p);
}

// Incoherent power combination.
inline SpectrumState combine_coupler(const SpectrumState& a, const SpectrumState& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("combine_coupler: length mismatch");
    SpectrumState out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        out[c] = a[c] + b[c];
    return out;
}

// Photodetector: total power across the spectrum.
inline double detect(const SpectrumState& s) {
    double total = 0.0;
    for (double v : s)
        total += v;
    return total;
}

// 10*log10(min(high) / max(low)); +inf when every low level is exactly zero.
inline double extinction_ratio(std::span<const double> high_levels,
                               std::span<const double> low_levels) {
    if (high_levels.empty() || low_levels.empty())
        throw std::invalid_argument("extinction_ratio: level sets must be nonempty");
    double min_high = high_levels[0];
    for (double v : high_levels)
        min_high = std::min(min_high, v);
    double max_low = low_levels[0];
    for (double v : low_levels)
        max_low = std::max(max_low, v);
    if (min_high <= 0.0)
        throw std::invalid_argument("extinction_ratio: high levels must be positive");
    if (max_low <= 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(min_high / max_low);
}

}  // namespace optopla
