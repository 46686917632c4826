// optopla - compile Boolean functions to wavelength-channel masks, simulate
// the cascaded spectral-modulator chain, and run the PLA-driven cellular
// automaton. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optopla/optopla.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ','))
        out.push_back(item);
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

// The paper's experimental layout; used whenever no config file is given.
optopla::PlaConfig builtin_config() {
    optopla::PlaConfig cfg;
    cfg.operand_count = 8;
    cfg.grid = optopla::default_grid();
    return cfg;
}

// Flag > PLA_CONFIG environment variable > built-in default.
optopla::PlaConfig resolve_config(const std::string& config_flag) {
    if (!config_flag.empty())
        return optopla::load_config_file(config_flag);
    if (const char* env = std::getenv("PLA_CONFIG"); env != nullptr && *env != '\0')
        return optopla::load_config_file(env);
    return builtin_config();
}

// A --function value: stdlib name, bundle JSON, or a single truth-table file.
std::vector<optopla::NamedTable> resolve_function(const std::string& spec, int operand_count) {
    if (optopla::is_stdlib_name(spec))
        return optopla::stdlib_function(spec, operand_count);
    std::ifstream in(spec);
    if (!in)
        throw std::runtime_error("unknown function '" + spec +
                                 "' (not a stdlib name or readable file)");
    char first = '\0';
    in >> std::ws;
    in.get(first);
    in.unget();
    if (first == '[') {
        nlohmann::json j;
        in >> j;
        return optopla::bundle_from_json(j);
    }
    optopla::TruthTable tt = optopla::read_table(in);
    return {{std::filesystem::path(spec).stem().string(), std::move(tt)}};
}

optopla::PlaConfig config_with_functions(const optopla::PlaConfig& base,
                                         const std::vector<optopla::NamedTable>& functions) {
    for (const optopla::NamedTable& fn : functions)
        if (fn.table.input_count != base.operand_count)
            throw std::runtime_error("function '" + fn.name + "' takes " +
                                     std::to_string(fn.table.input_count) +
                                     " operands but the configuration has " +
                                     std::to_string(base.operand_count));
    return optopla::make_pla_config(base.operand_count, functions, base.grid, base.params);
}

int cmd_compile(const std::string& expr, const std::string& table_path,
                const std::string& vars_csv, const std::string& out_path) {
    optopla::TruthTable tt;
    if (!expr.empty()) {
        const std::vector<std::string> vars = split_commas(vars_csv);
        if (vars.empty())
            throw std::runtime_error("--expr requires --vars");
        const optopla::BoolExpr e = optopla::parse_expr(expr, vars);
        tt = optopla::truth_table(e, static_cast<int>(vars.size()));
    } else {
        std::ifstream in(table_path);
        if (!in)
            throw std::runtime_error("cannot open '" + table_path + "'");
        tt = optopla::read_table(in);
    }
    auto out = open_output(out_path);
    optopla::write_table(out, tt);
    std::cout << "N=" << tt.input_count << " minterms=" << tt.minterm_count() << "\n";
    return kExitOk;
}

int cmd_simulate(const std::string& config_flag, const std::string& function,
                 const std::string& input_bits, bool all, const std::string& out_path) {
    optopla::PlaConfig cfg = resolve_config(config_flag);
    if (!function.empty())
        cfg = config_with_functions(cfg, resolve_function(function, cfg.operand_count));
    else if (cfg.outputs.empty())
        throw std::runtime_error("configuration has no outputs; pass --function");

    const optopla::PlaEvaluator ev(cfg);
    if (all) {
        const optopla::SweepResult sweep = optopla::sweep_all_inputs(ev);
        if (!out_path.empty()) {
            auto out = open_output(out_path);
            optopla::write_sweep_csv(out, sweep);
        } else {
            optopla::write_sweep_csv(std::cout, sweep);
        }
        std::cout << optopla::margin_summary(sweep) << "\n";
        return kExitOk;
    }

    const optopla::InputVector x = optopla::input_from_string(input_bits);
    const optopla::Calibration cal = ev.calibrate();
    const optopla::EvalResult r = ev.evaluate(x, cal);
    std::cout << "input " << input_bits << " (state " << optopla::channel_index(x) << ")\n";
    for (std::size_t o = 0; o < cfg.outputs.size(); ++o)
        std::cout << cfg.outputs[o].name << " power=" << optopla::format_db(r.power_dbm[o])
                  << " dBm (" << optopla::format_mw(r.power_mw[o])
                  << " mW) bit=" << r.decisions[o] << "\n";
    return kExitOk;
}

int cmd_matrix(const std::string& config_flag, const std::string& out_path) {
    const optopla::PlaConfig cfg = resolve_config(config_flag);
    const optopla::ConfusionMatrix m = optopla::confusion_matrix(cfg);
    auto out = open_output(out_path);
    optopla::write_confusion_csv(out, m);
    std::cout << "min_row_margin_db=" << optopla::format_db(optopla::min_diagonal_margin_db(m))
              << "\n";
    return kExitOk;
}

int cmd_waveform(const std::string& config_flag, const std::string& function,
                 const std::string& streams_csv, double rate, int samples_per_bit, double rise,
                 const std::string& out_path) {
    optopla::PlaConfig cfg = resolve_config(config_flag);
    if (!function.empty())
        cfg = config_with_functions(cfg, resolve_function(function, cfg.operand_count));
    else if (cfg.outputs.empty())
        throw std::runtime_error("configuration has no outputs; pass --function");

    std::vector<std::vector<std::uint8_t>> streams;
    for (const std::string& s : split_commas(streams_csv))
        streams.push_back(optopla::input_from_string(s));
    if (static_cast<int>(streams.size()) != cfg.operand_count)
        throw std::runtime_error("--streams needs " + std::to_string(cfg.operand_count) +
                                 " comma-separated bit strings, one per operand");
    // a single-bit stream means "hold this operand constant"
    std::size_t bit_count = 1;
    for (const auto& s : streams)
        bit_count = std::max(bit_count, s.size());
    for (auto& s : streams)
        if (s.size() == 1 && bit_count > 1)
            s.assign(bit_count, s[0]);

    const optopla::WaveformRun run =
        optopla::run_waveform(cfg, streams, rate, samples_per_bit, rise);
    auto out = open_output(out_path);
    optopla::write_waveform_csv(out, run);
    std::cout << "wrote " << out_path << " (" << run.time_ps.size() << " samples, "
              << run.bit_count << " bits)\n";
    return kExitOk;
}

int cmd_life(const std::string& config_flag, const std::string& pattern_path, int steps,
             const std::string& boundary_name, const std::string& rule_path,
             const std::string& out_path, const std::string& pgm_dir) {
    optopla::Boundary boundary;
    if (boundary_name == "dead")
        boundary = optopla::Boundary::kDead;
    else if (boundary_name == "toroidal")
        boundary = optopla::Boundary::kToroidal;
    else
        throw std::runtime_error("--boundary must be dead or toroidal");

    std::ifstream pattern_in(pattern_path);
    if (!pattern_in)
        throw std::runtime_error("cannot open '" + pattern_path + "'");
    const optopla::CellGrid start = optopla::parse_pattern(pattern_in, boundary);

    optopla::TruthTable rule = optopla::conway_truth_table();
    if (!rule_path.empty()) {
        std::ifstream rule_in(rule_path);
        if (!rule_in)
            throw std::runtime_error("cannot open '" + rule_path + "'");
        rule = optopla::read_table(rule_in);
        if (rule.input_count != 9)
            throw std::runtime_error("--rule must be a 9-input truth table");
    }

    optopla::PlaConfig base = resolve_config(config_flag);
    const optopla::PlaConfig cfg =
        optopla::make_pla_config(9, {{"next_state", rule}}, base.grid, base.params);
    const optopla::PlaLifeStepper stepper(cfg);
    const std::vector<optopla::CellGrid> trace = stepper.run(start, steps);

    auto out = open_output(out_path);
    optopla::write_trace(out, trace);
    if (!pgm_dir.empty()) {
        std::filesystem::create_directories(pgm_dir);
        for (std::size_t k = 0; k < trace.size(); ++k) {
            char name[32];
            std::snprintf(name, sizeof(name), "step_%03zu.pgm", k);
            auto pgm = open_output((std::filesystem::path(pgm_dir) / name).string());
            optopla::write_pgm(pgm, trace[k]);
        }
    }
    std::cout << "steps=" << steps << " live_final=" << trace.back().live_count()
              << " margin_db=" << optopla::format_db(stepper.margin_db()) << "\n";
    return kExitOk;
}

int cmd_estimate(double lambda1, double lambda2, double bw) {
    const optopla::CapacityEstimate est = optopla::estimate_capacity(lambda1, lambda2, bw);
    std::cout << "delta_f=" << optopla::format_ghz_tenth(est.delta_f_ghz) << " GHz, W="
              << est.max_channels << ", N=" << est.max_operands << "\n";
    std::cout << "modulators: proposed=" << est.modulators_proposed
              << ", eo=" << est.modulators_eo << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelength-parallel optical programmable logic array toolkit"};
    app.require_subcommand(1);

    // compile
    auto* compile = app.add_subcommand("compile", "Compile an expression or table to a mask file");
    std::string expr, table_path, vars_csv, compile_out;
    auto* expr_opt = compile->add_option("--expr", expr, "Boolean expression (&, |, ^, ~, 0, 1)");
    auto* table_opt = compile->add_option("--table", table_path, "Input truth-table file");
    compile->add_option("--vars", vars_csv, "Comma-separated variable names, operand order");
    compile->add_option("--out", compile_out, "Output truth-table file")->required();
    expr_opt->excludes(table_opt);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Evaluate a function on the device chain");
    std::string sim_config, sim_function, sim_input, sim_out;
    bool sim_all = false;
    simulate->add_option("--config", sim_config, "PLA configuration JSON");
    simulate->add_option("--function", sim_function, "decoder|comparator4|adder4|multiplier4 or file");
    auto* input_opt = simulate->add_option("--input", sim_input, "Input bits, operand 1 first");
    auto* all_opt = simulate->add_flag("--all", sim_all, "Sweep all input states");
    simulate->add_option("--out", sim_out, "CSV output path for --all");
    input_opt->excludes(all_opt);

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Write the input-state/channel confusion matrix");
    std::string mat_config, mat_out;
    matrix->add_option("--config", mat_config, "PLA configuration JSON");
    matrix->add_option("--out", mat_out, "CSV output path")->required();

    // waveform
    auto* waveform = app.add_subcommand("waveform", "Time-domain simulation of NRZ streams");
    std::string wave_config, wave_function, wave_streams, wave_out;
    double wave_rate = 10e9, wave_rise = 0.3;
    int wave_spb = 16;
    waveform->add_option("--config", wave_config, "PLA configuration JSON");
    waveform->add_option("--function", wave_function, "Function as in simulate");
    waveform->add_option("--streams", wave_streams, "Comma-separated bit strings, one per operand")
        ->required();
    waveform->add_option("--rate", wave_rate, "Bit rate in b/s (default 10e9)");
    waveform->add_option("--samples-per-bit", wave_spb, "Samples per bit (default 16)");
    waveform->add_option("--rise", wave_rise, "Transition time as a fraction of the bit period");
    waveform->add_option("--out", wave_out, "CSV output path")->required();

    // life
    auto* life = app.add_subcommand("life", "Run the PLA-driven cellular automaton");
    std::string life_config, life_pattern, life_boundary = "dead", life_rule, life_out, life_pgm;
    int life_steps = 0;
    life->add_option("--config", life_config, "PLA configuration JSON (grid/params)");
    life->add_option("--pattern", life_pattern, "Pattern file ('.'/'O' rows)")->required();
    life->add_option("--steps", life_steps, "Number of steps")->required();
    life->add_option("--boundary", life_boundary, "dead|toroidal (default dead)");
    life->add_option("--rule", life_rule, "Optional 9-input rule table file");
    life->add_option("--out", life_out, "Trace output file")->required();
    life->add_option("--pgm-dir", life_pgm, "Directory for per-step PGM images");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Channel-capacity estimate for a band");
    double lambda1 = 0.0, lambda2 = 0.0, bw = 0.0;
    estimate->add_option("--lambda1", lambda1, "Short wavelength in nm")->required();
    estimate->add_option("--lambda2", lambda2, "Long wavelength in nm")->required();
    estimate->add_option("--bw", bw, "Channel bandwidth in GHz")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        if (compile->parsed()) {
            if (expr.empty() == table_path.empty())
                throw CLI::ValidationError("compile", "exactly one of --expr/--table required");
            return cmd_compile(expr, table_path, vars_csv, compile_out);
        }
        if (simulate->parsed()) {
            if (sim_input.empty() && !sim_all)
                throw CLI::ValidationError("simulate", "one of --input/--all required");
            return cmd_simulate(sim_config, sim_function, sim_input, sim_all, sim_out);
        }
        if (matrix->parsed())
            return cmd_matrix(mat_config, mat_out);
        if (waveform->parsed())
            return cmd_waveform(wave_config, wave_function, wave_streams, wave_rate, wave_spb,
                                wave_rise, wave_out);
        if (life->parsed())
            return cmd_life(life_config, life_pattern, life_steps, life_boundary, life_rule,
                            life_out, life_pgm);
        if (estimate->parsed())
            return cmd_estimate(lambda1, lambda2, bw);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsageError;
    } catch (const optopla::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsageError;
}
