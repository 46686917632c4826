#pragma once

// End-to-end evaluation of a PLA configuration: source spectrum through the
// SM cascade (EDFA mid-chain), the spatial switch tree, per-output waveshaper
// masks and detection. Thresholds are calibrated by an exhaustive input sweep.
// Everything is deterministic; a PlaEvaluator is immutable after construction
// and safe to share across threads.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "optopla/channel_grid.hpp"
#include "optopla/devices.hpp"
#include "optopla/pla_config.hpp"

namespace optopla {

struct OutputCalibration {
    double threshold_mw = 0.0;
    double margin_db = 0.0;  // 10*log10(min_high / max_low)
    double min_high_mw = 0.0;
    double max_low_mw = 0.0;
};

using Calibration = std::vector<OutputCalibration>;

struct EvalResult {
    std::vector<double> power_mw;
    std::vector<double> power_dbm;
    std::vector<int> decisions;
    std::vector<double> thresholds_mw;
};

// An output whose low levels overlap its high levels cannot be thresholded;
// the noise parameters make the function unreliable.
class CalibrationError : public std::runtime_error {
  public:
    CalibrationError(std::string output_name, double min_high_mw, double max_low_mw)
        : std::runtime_error("output '" + output_name + "' is not separable: min(high) = " +
                             std::to_string(min_high_mw) + " mW <= max(low) = " +
                             std::to_string(max_low_mw) + " mW"),
          output_name_(std::move(output_name)) {}

    const std::string& output_name() const { return output_name_; }

  private:
    std::string output_name_;
};

class PlaEvaluator {
  public:
    explicit PlaEvaluator(PlaConfig cfg) : cfg_(std::move(cfg)) {
        cfg_.validate();
        const int n_w = cfg_.wavelength_operands();
        stages_.reserve(static_cast<std::size_t>(n_w));
        for (int j = 1; j <= n_w; ++j)
            stages_.push_back(SpectralModulatorStage::for_stage(j, n_w));
    }

    const PlaConfig& config() const { return cfg_; }

    // Minterm-bus spectrum at the waveshaper input for continuous SM drive
    // levels (one per wavelength operand, in stage order).
    SpectrumState bus_spectrum_analog(std::span<const double> drives) const {
        const int n_w = cfg_.wavelength_operands();
        if (static_cast<int>(drives.size()) != n_w)
            throw std::invalid_argument("bus_spectrum: expected one drive per SM stage");
        SpectrumState s(cfg_.grid.channel_count, dbm_to_mw(cfg_.params.source_power));
        for (int j = 1; j <= n_w; ++j) {
            s = apply_sm_analog(s, stages_[static_cast<std::size_t>(j - 1)],
                                drives[static_cast<std::size_t>(j - 1)], cfg_.params);
            if (j == cfg_.params.edfa_position)
                s = apply_edfa(s, cfg_.grid, cfg_.params);
        }
        return s;
    }

    SpectrumState bus_spectrum(std::span<const std::uint8_t> wavelength_bits) const {
        std::vector<double> drives(wavelength_bits.size());
        for (std::size_t i = 0; i < wavelength_bits.size(); ++i)
            drives[i] = static_cast<double>(wavelength_bits[i]);
        return bus_spectrum_analog(drives);
    }

    // One spectrum per spatial port, after the depth-d switch tree.
    std::vector<SpectrumState> port_spectra_analog(std::span<const double> drives) const {
        if (static_cast<int>(drives.size()) != cfg_.operand_count)
            throw std::invalid_argument("port_spectra: expected one drive per operand");
        const int n_w = cfg_.wavelength_operands();
        std::vector<SpectrumState> ports;
        ports.push_back(bus_spectrum_analog(drives.subspan(0, static_cast<std::size_t>(n_w))));
        for (int level = 0; level < cfg_.spatial_operands(); ++level) {
            const double drive = drives[static_cast<std::size_t>(n_w + level)];
            std::vector<SpectrumState> next;
            next.reserve(ports.size() * 2);
            for (const SpectrumState& s : ports) {
                auto [upper, lower] = apply_spatial_switch_analog(s, drive, cfg_.params);
                // bit value 0 first keeps ports ordered by their encoded value
                next.push_back(std::move(lower));
                next.push_back(std::move(upper));
            }
            ports = std::move(next);
        }
        return ports;
    }

    std::vector<SpectrumState> port_spectra(const InputVector& x) const {
        return port_spectra_analog(to_drives(x));
    }

    // Detected power per output: waveshaper masks per port, coupler-combined.
    std::vector<double> output_powers_analog(std::span<const double> drives) const {
        const std::vector<SpectrumState> ports = port_spectra_analog(drives);
        const double ws = cfg_.params.ws_factor();
        std::vector<double> powers(cfg_.outputs.size(), 0.0);
        for (std::size_t o = 0; o < cfg_.outputs.size(); ++o) {
            double total = 0.0;
            for (std::size_t p = 0; p < ports.size(); ++p) {
                const ChannelMask& mask = cfg_.outputs[o].port_masks[p];
                const SpectrumState& s = ports[p];
                for (std::size_t c = 0; c < s.size(); ++c)
                    if (mask.test(c))
                        total += s[c];
            }
            powers[o] = total * ws;
        }
        return powers;
    }

    std::vector<double> output_powers(const InputVector& x) const {
        return output_powers_analog(to_drives(x));
    }

    // Exhaustive sweep of all 2^N inputs; threshold is the dB midpoint of
    // min(high) and max(low), or min(high)/2 when no low level is above zero.
    Calibration calibrate() const {
        if (cfg_.operand_count > 16)
            throw std::invalid_argument("calibrate: exhaustive sweep needs operand count <= 16");
        const std::uint32_t states = std::uint32_t{1} << cfg_.operand_count;
        const std::size_t n_out = cfg_.outputs.size();
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<double> min_high(n_out, inf);
        std::vector<double> max_low(n_out, 0.0);
        std::vector<bool> any_high(n_out, false);
        std::vector<bool> any_low(n_out, false);
        for (std::uint32_t i = 0; i < states; ++i) {
            const InputVector x = minterm_of_channel(i, cfg_.operand_count);
            const std::vector<double> powers = output_powers(x);
            for (std::size_t o = 0; o < n_out; ++o) {
                if (cfg_.expected_output(o, x)) {
                    any_high[o] = true;
                    min_high[o] = std::min(min_high[o], powers[o]);
                } else {
                    any_low[o] = true;
                    max_low[o] = std::max(max_low[o], powers[o]);
                }
            }
        }
        Calibration cal(n_out);
        for (std::size_t o = 0; o < n_out; ++o) {
            OutputCalibration& c = cal[o];
            if (!any_high[o]) {
                // constant-0 output: never decide high
                c.threshold_mw = inf;
                c.margin_db = inf;
                c.min_high_mw = inf;
                c.max_low_mw = any_low[o] ? max_low[o] : 0.0;
                continue;
            }
            c.min_high_mw = min_high[o];
            c.max_low_mw = any_low[o] ? max_low[o] : 0.0;
            if (c.max_low_mw <= 0.0) {
                c.threshold_mw = c.min_high_mw / 2.0;
                c.margin_db = inf;
            } else {
                if (c.min_high_mw <= c.max_low_mw)
                    throw CalibrationError(cfg_.outputs[o].name, c.min_high_mw, c.max_low_mw);
                c.threshold_mw = std::sqrt(c.min_high_mw * c.max_low_mw);
                c.margin_db = 10.0 * std::log10(c.min_high_mw / c.max_low_mw);
            }
        }
        return cal;
    }

    EvalResult evaluate(const InputVector& x, const Calibration& cal) const {
        if (cal.size() != cfg_.outputs.size())
            throw std::invalid_argument("evaluate: calibration does not match outputs");
        EvalResult r;
        r.power_mw = output_powers(x);
        r.power_dbm.reserve(r.power_mw.size());
        r.decisions.reserve(r.power_mw.size());
        r.thresholds_mw.reserve(r.power_mw.size());
        for (std::size_t o = 0; o < r.power_mw.size(); ++o) {
            r.power_dbm.push_back(mw_to_dbm(r.power_mw[o]));
            r.decisions.push_back(r.power_mw[o] > cal[o].threshold_mw ? 1 : 0);
            r.thresholds_mw.push_back(cal[o].threshold_mw);
        }
        return r;
    }

  private:
    std::vector<double> to_drives(const InputVector& x) const {
        if (static_cast<int>(x.size()) != cfg_.operand_count)
            throw std::invalid_argument("evaluate: expected " +
                                        std::to_string(cfg_.operand_count) + " operand bits, got " +
                                        std::to_string(x.size()));
        validate_input_vector(x);
        std::vector<double> drives(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            drives[i] = static_cast<double>(x[i]);
        return drives;
    }

    PlaConfig cfg_;
    std::vector<SpectralModulatorStage> stages_;
};

inline Calibration calibrate_thresholds(const PlaConfig& cfg) {
    return PlaEvaluator(cfg).calibrate();
}

// Convenience single-shot form; sweeps for calibration on every call, so
// build a PlaEvaluator + Calibration pair for anything iterative.
inline EvalResult evaluate(const PlaConfig& cfg, const InputVector& x) {
    PlaEvaluator ev(cfg);
    return ev.evaluate(x, ev.calibrate());
}

// Row i = per-channel dBm at the waveshaper input under input state i.
struct ConfusionMatrix {
    std::vector<std::vector<double>> rows_dbm;
};

inline ConfusionMatrix confusion_matrix(const PlaConfig& cfg) {
    PlaEvaluator ev(cfg);
    if (cfg.spatial_operands() != 0)
        throw std::invalid_argument("confusion_matrix: configuration must be wavelength-only");
    const std::uint32_t states = std::uint32_t{1} << cfg.operand_count;
    if (states != cfg.grid.channel_count)
        throw std::invalid_argument("confusion_matrix: operand count does not span the grid");
    ConfusionMatrix m;
    m.rows_dbm.reserve(states);
    for (std::uint32_t i = 0; i < states; ++i) {
        const InputVector x = minterm_of_channel(i, cfg.operand_count);
        const SpectrumState bus = ev.bus_spectrum(x);
        std::vector<double> row(bus.size());
        for (std::size_t c = 0; c < bus.size(); ++c)
            row[c] = mw_to_dbm(bus[c]);
        m.rows_dbm.push_back(std::move(row));
    }
    return m;
}

// Smallest (diagonal - strongest off-diagonal) over all rows, in dB.
inline double min_diagonal_margin_db(const ConfusionMatrix& m) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.rows_dbm.size(); ++i) {
        const std::vector<double>& row = m.rows_dbm[i];
        double max_off = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < row.size(); ++c)
            if (c != i)
                max_off = std::max(max_off, row[c]);
        worst = std::min(worst, row[i] - max_off);
    }
    return worst;
}

}  // namespace optopla
