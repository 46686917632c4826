#pragma once

// Scale estimate for a given wavelength range and per-channel bandwidth:
// total bandwidth delta_f = c/lambda1 - c/lambda2, maximum channel count
// W = floor(delta_f / channel bandwidth), operand count N = floor(log2 W).

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace optopla {

// Speed of light as nm*GHz (299792.458 km/s).
inline constexpr double kSpeedOfLightNmGhz = 2.99792458e8;

struct CapacityEstimate {
    double delta_f_ghz = 0.0;
    std::uint64_t max_channels = 0;   // W
    int max_operands = 0;             // N
    int modulators_proposed = 0;      // N, one SM per operand
    std::int64_t modulators_eo = 0;   // N^2, the electro-optic alternative
};

inline std::pair<int, std::int64_t> modulator_counts(int operand_count) {
    if (operand_count < 0)
        throw std::invalid_argument("modulator_counts: operand count must be nonnegative");
    return {operand_count,
            static_cast<std::int64_t>(operand_count) * static_cast<std::int64_t>(operand_count)};
}

inline CapacityEstimate estimate_capacity(double lambda1_nm, double lambda2_nm,
                                          double channel_bandwidth_ghz) {
    if (lambda1_nm <= 0.0 || lambda2_nm <= lambda1_nm)
        throw std::invalid_argument("estimate_capacity: require lambda2 > lambda1 > 0");
    if (channel_bandwidth_ghz <= 0.0)
        throw std::invalid_argument("estimate_capacity: channel bandwidth must be positive");

    CapacityEstimate est;
    est.delta_f_ghz = kSpeedOfLightNmGhz / lambda1_nm - kSpeedOfLightNmGhz / lambda2_nm;
    est.max_channels = static_cast<std::uint64_t>(est.delta_f_ghz / channel_bandwidth_ghz);
    est.max_operands =
        est.max_channels >= 1 ? std::bit_width(est.max_channels) - 1 : 0;
    const auto [proposed, eo] = modulator_counts(est.max_operands);
    est.modulators_proposed = proposed;
    est.modulators_eo = eo;
    return est;
}

}  // namespace optopla
