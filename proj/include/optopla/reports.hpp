#pragma once

// Report writers and the fixed numeric formats shared by the CLI and tests:
// dB/dBm with two decimals ("-inf" for zero power), mW with four significant
// figures. Output is bit-reproducible run to run.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "optopla/simulator.hpp"
#include "optopla/waveform.hpp"

namespace optopla {

inline std::string format_db(double db) {
    if (std::isinf(db))
        return db > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", db);
    return buf;
}

inline std::string format_mw(double mw) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", mw);
    return buf;
}

// Truncate toward zero at 0.1 GHz; reporting resolution of delta_f.
inline std::string format_ghz_tenth(double ghz) {
    const double truncated = std::floor(ghz * 10.0 + 1e-7) / 10.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", truncated);
    return buf;
}

// Header row: channel indices; first column: input state; cells: dBm.
inline void write_confusion_csv(std::ostream& os, const ConfusionMatrix& m) {
    os << "input_state";
    if (!m.rows_dbm.empty())
        for (std::size_t c = 0; c < m.rows_dbm[0].size(); ++c)
            os << "," << c;
    os << "\n";
    for (std::size_t i = 0; i < m.rows_dbm.size(); ++i) {
        os << i;
        for (double dbm : m.rows_dbm[i])
            os << "," << format_db(dbm);
        os << "\n";
    }
}

struct SweepResult {
    std::vector<std::string> output_names;
    Calibration calibration;
    // row per input state, in state order
    std::vector<InputVector> inputs;
    std::vector<EvalResult> results;
};

inline SweepResult sweep_all_inputs(const PlaEvaluator& ev) {
    const PlaConfig& cfg = ev.config();
    SweepResult sweep;
    for (const OutputSpec& out : cfg.outputs)
        sweep.output_names.push_back(out.name);
    sweep.calibration = ev.calibrate();
    const std::uint32_t states = std::uint32_t{1} << cfg.operand_count;
    sweep.inputs.reserve(states);
    sweep.results.reserve(states);
    for (std::uint32_t i = 0; i < states; ++i) {
        InputVector x = minterm_of_channel(i, cfg.operand_count);
        sweep.results.push_back(ev.evaluate(x, sweep.calibration));
        sweep.inputs.push_back(std::move(x));
    }
    return sweep;
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "input_state,input_bits";
    for (const std::string& name : sweep.output_names)
        os << "," << name << "_dbm," << name << "_bit";
    os << "\n";
    for (std::size_t i = 0; i < sweep.results.size(); ++i) {
        os << i << "," << input_to_string(sweep.inputs[i]);
        const EvalResult& r = sweep.results[i];
        for (std::size_t o = 0; o < r.power_mw.size(); ++o)
            os << "," << format_db(r.power_dbm[o]) << "," << r.decisions[o];
        os << "\n";
    }
}

// One line: every output's calibrated margin plus the overall minimum.
inline std::string margin_summary(const SweepResult& sweep) {
    std::string line = "margins_db:";
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t o = 0; o < sweep.output_names.size(); ++o) {
        const double m = sweep.calibration[o].margin_db;
        line += " " + sweep.output_names[o] + "=" + format_db(m);
        min_margin = std::min(min_margin, m);
    }
    line += " (min " + format_db(min_margin) + ")";
    return line;
}

inline void write_waveform_csv(std::ostream& os, const WaveformRun& run) {
    os << "time_ps";
    for (const std::string& name : run.output_names)
        os << "," << name;
    os << "\n";
    char buf[32];
    for (std::size_t s = 0; s < run.time_ps.size(); ++s) {
        std::snprintf(buf, sizeof(buf), "%.2f", run.time_ps[s]);
        os << buf;
        for (const Waveform& w : run.outputs)
            os << "," << format_mw(w.samples_mw[s]);
        os << "\n";
    }
}

}  // namespace optopla
