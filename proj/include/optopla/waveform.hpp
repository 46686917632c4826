#pragma once

// Time-domain engine. Each operand drives its switch as an NRZ stream with
// raised-cosine transitions centered on the bit boundaries; the chain is
// re-evaluated at every sample instant with the instantaneous (analog) switch
// states. Transitions never reach the bit center, so mid-bit samples equal
// the static evaluation of that bit's input vector.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "optopla/simulator.hpp"

namespace optopla {

struct Waveform {
    double sample_rate = 0.0;  // samples/s
    double bit_rate = 0.0;     // b/s
    std::vector<double> samples_mw;
};

struct WaveformRun {
    double bit_rate = 0.0;
    int samples_per_bit = 0;
    std::size_t bit_count = 0;
    std::vector<double> time_ps;
    std::vector<std::string> output_names;
    std::vector<Waveform> outputs;
    Calibration calibration;
};

// Drive level of one stream at time t (units of bit periods). The transition
// between bits k-1 and k spans [k - rise/2, k + rise/2); the first bit starts
// settled and the last holds its level.
inline double nrz_drive_level(const std::vector<std::uint8_t>& stream, double t_bits,
                              double rise_time_fraction) {
    const std::size_t n = stream.size();
    const auto bit_at = [&](std::int64_t k) -> double {
        if (k < 0)
            k = 0;
        if (k >= static_cast<std::int64_t>(n))
            k = static_cast<std::int64_t>(n) - 1;
        return static_cast<double>(stream[static_cast<std::size_t>(k)]);
    };
    const auto k = static_cast<std::int64_t>(std::floor(t_bits));
    const double cur = bit_at(k);
    if (rise_time_fraction <= 0.0)
        return cur;
    const double half = rise_time_fraction / 2.0;
    const double frac = t_bits - static_cast<double>(k);
    double from = cur;
    double to = cur;
    double s = 0.0;  // progress through the transition, in [0, 1)
    if (frac < half) {
        from = bit_at(k - 1);
        to = cur;
        s = (frac + half) / rise_time_fraction;
    } else if (frac >= 1.0 - half) {
        from = cur;
        to = bit_at(k + 1);
        s = (frac - (1.0 - half)) / rise_time_fraction;
    } else {
        return cur;
    }
    const double ramp = 0.5 * (1.0 - std::cos(std::numbers::pi * s));
    return from + (to - from) * ramp;
}

inline WaveformRun run_waveform(const PlaConfig& cfg,
                                const std::vector<std::vector<std::uint8_t>>& streams,
                                double bit_rate, int samples_per_bit,
                                double rise_time_fraction) {
    const PlaEvaluator ev(cfg);
    if (static_cast<int>(streams.size()) != cfg.operand_count)
        throw std::invalid_argument("run_waveform: expected one stream per operand");
    if (streams[0].empty())
        throw std::invalid_argument("run_waveform: streams must be nonempty");
    const std::size_t bit_count = streams[0].size();
    for (const auto& s : streams) {
        if (s.size() != bit_count)
            throw std::invalid_argument("run_waveform: streams must have equal length");
        for (std::uint8_t b : s)
            if (b > 1)
                throw std::invalid_argument("run_waveform: stream bits must be 0 or 1");
    }
    if (bit_rate <= 0.0)
        throw std::invalid_argument("run_waveform: bit rate must be positive");
    if (samples_per_bit < 2)
        throw std::invalid_argument("run_waveform: need at least 2 samples per bit");
    if (rise_time_fraction < 0.0 || rise_time_fraction > 1.0)
        throw std::invalid_argument("run_waveform: rise_time_fraction must be in [0, 1]");

    WaveformRun run;
    run.bit_rate = bit_rate;
    run.samples_per_bit = samples_per_bit;
    run.bit_count = bit_count;
    run.calibration = ev.calibrate();
    const double sample_rate = bit_rate * samples_per_bit;
    for (const OutputSpec& out : cfg.outputs) {
        run.output_names.push_back(out.name);
        run.outputs.push_back(Waveform{sample_rate, bit_rate, {}});
    }

    const std::size_t total_samples = bit_count * static_cast<std::size_t>(samples_per_bit);
    run.time_ps.reserve(total_samples);
    for (Waveform& w : run.outputs)
        w.samples_mw.reserve(total_samples);

    std::vector<double> drives(streams.size());
    for (std::size_t s = 0; s < total_samples; ++s) {
        const double t_bits =
            static_cast<double>(s) / static_cast<double>(samples_per_bit);
        run.time_ps.push_back(static_cast<double>(s) / sample_rate * 1e12);
        for (std::size_t op = 0; op < streams.size(); ++op)
            drives[op] = nrz_drive_level(streams[op], t_bits, rise_time_fraction);
        const std::vector<double> powers = ev.output_powers_analog(drives);
        for (std::size_t o = 0; o < powers.size(); ++o)
            run.outputs[o].samples_mw.push_back(powers[o]);
    }
    return run;
}

// Thresholded value of each output at the center of each bit.
inline std::vector<std::vector<int>> midbit_decisions(const WaveformRun& run) {
    std::vector<std::vector<int>> decisions(run.outputs.size());
    const std::size_t spb = static_cast<std::size_t>(run.samples_per_bit);
    for (std::size_t o = 0; o < run.outputs.size(); ++o) {
        const Waveform& w = run.outputs[o];
        const double threshold = run.calibration[o].threshold_mw;
        for (std::size_t k = 0; k < run.bit_count; ++k) {
            const double p = w.samples_mw[k * spb + spb / 2];
            decisions[o].push_back(p > threshold ? 1 : 0);
        }
    }
    return decisions;
}

}  // namespace optopla
