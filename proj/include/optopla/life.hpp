#pragma once

// Two-dimensional cellular automaton driven by the nine-input PLA. The cell
// neighborhood maps to operands row-major, (NW, N, NE, W, C, E, SW, S, SE),
// so operand 5 is the center cell; the ninth operand rides the spatial
// switch. A textbook software update serves as the independent oracle.

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "optopla/pla_config.hpp"
#include "optopla/simulator.hpp"
#include "optopla/truth_table.hpp"

namespace optopla {

enum class Boundary { kDead, kToroidal };

struct CellGrid {
    int width = 0;
    int height = 0;
    Boundary boundary = Boundary::kDead;
    std::vector<std::uint8_t> cells;  // row-major, height*width entries

    CellGrid() = default;
    CellGrid(int w, int h, Boundary b = Boundary::kDead)
        : width(w), height(h), boundary(b), cells(static_cast<std::size_t>(w) * h, 0) {
        validate();
    }

    void validate() const {
        if (width < 3 || height < 3)
            throw std::invalid_argument("CellGrid: dimensions must be at least 3x3");
        if (cells.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
            throw std::invalid_argument("CellGrid: cell count does not match dimensions");
        for (std::uint8_t c : cells)
            if (c > 1)
                throw std::invalid_argument("CellGrid: cells must be 0 or 1");
    }

    std::uint8_t at(int x, int y) const {
        return cells[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)];
    }
    void set(int x, int y, std::uint8_t v) {
        cells[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)] = v;
    }

    // Neighborhood access honoring the boundary mode.
    std::uint8_t cell_or_boundary(int x, int y) const {
        if (boundary == Boundary::kToroidal) {
            x = ((x % width) + width) % width;
            y = ((y % height) + height) % height;
            return at(x, y);
        }
        if (x < 0 || x >= width || y < 0 || y >= height)
            return 0;
        return at(x, y);
    }

    // Operands 1..9 row-major around (x, y); element 4 is the center.
    InputVector neighborhood(int x, int y) const {
        InputVector v;
        v.reserve(9);
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx)
                v.push_back(cell_or_boundary(x + dx, y + dy));
        return v;
    }

    std::size_t live_count() const {
        std::size_t n = 0;
        for (std::uint8_t c : cells)
            n += c;
        return n;
    }

    bool operator==(const CellGrid&) const = default;
};

// Conway's rules as a nine-input table: live next iff three neighbors are
// live, or the center is live with exactly two live neighbors.
inline TruthTable conway_truth_table() {
    TruthTable tt;
    tt.input_count = 9;
    tt.outputs.resize(512);
    for (std::uint32_t c = 0; c < 512; ++c) {
        const InputVector x = minterm_of_channel(c, 9);
        int neighbors = 0;
        for (std::size_t j = 0; j < 9; ++j)
            if (j != 4)
                neighbors += x[j];
        const bool center = x[4] != 0;
        tt.outputs[c] = neighbors == 3 || (center && neighbors == 2);
    }
    return tt;
}

// Independent oracle: the textbook update, no tables, no PLA.
inline CellGrid direct_step(const CellGrid& g) {
    CellGrid next = g;
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) {
            int neighbors = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0)
                        continue;
                    neighbors += g.cell_or_boundary(x + dx, y + dy);
                }
            const bool live = g.at(x, y) != 0;
            next.set(x, y, neighbors == 3 || (live && neighbors == 2) ? 1 : 0);
        }
    return next;
}

// Lookup oracle for arbitrary nine-input rules.
inline CellGrid rule_table_step(const CellGrid& g, const TruthTable& rule) {
    if (rule.input_count != 9)
        throw std::invalid_argument("rule_table_step: rule must take 9 inputs");
    CellGrid next = g;
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x)
            next.set(x, y, rule.at(channel_index(g.neighborhood(x, y))) ? 1 : 0);
    return next;
}

// Steps a grid by evaluating every cell's neighborhood through the simulated
// nine-operand PLA. The per-neighborhood decision is input-independent and
// the simulation deterministic, so all 512 evaluations are done once up
// front and reused as a lookup table.
class PlaLifeStepper {
  public:
    explicit PlaLifeStepper(const PlaConfig& pla9) {
        if (pla9.operand_count != 9)
            throw std::invalid_argument("PlaLifeStepper: configuration must have 9 operands");
        if (pla9.outputs.size() != 1)
            throw std::invalid_argument("PlaLifeStepper: configuration must have one output");
        const PlaEvaluator ev(pla9);
        const Calibration cal = ev.calibrate();
        margin_db_ = cal[0].margin_db;
        for (std::uint32_t c = 0; c < 512; ++c) {
            const EvalResult r = ev.evaluate(minterm_of_channel(c, 9), cal);
            next_state_[c] = static_cast<std::uint8_t>(r.decisions[0]);
        }
    }

    double margin_db() const { return margin_db_; }

    std::uint8_t next_state(const InputVector& neighborhood) const {
        if (neighborhood.size() != 9)
            throw std::invalid_argument("next_state: neighborhood must have 9 cells");
        return next_state_[channel_index(neighborhood)];
    }

    CellGrid step(const CellGrid& g) const {
        g.validate();
        CellGrid next = g;
        for (int y = 0; y < g.height; ++y)
            for (int x = 0; x < g.width; ++x)
                next.set(x, y, next_state_[channel_index(g.neighborhood(x, y))]);
        return next;
    }

    // trace[0] = g, trace[k+1] = step(trace[k]).
    std::vector<CellGrid> run(const CellGrid& g, int steps) const {
        if (steps < 0)
            throw std::invalid_argument("run: step count must be nonnegative");
        std::vector<CellGrid> trace;
        trace.reserve(static_cast<std::size_t>(steps) + 1);
        trace.push_back(g);
        for (int k = 0; k < steps; ++k)
            trace.push_back(step(trace.back()));
        return trace;
    }

  private:
    std::array<std::uint8_t, 512> next_state_{};
    double margin_db_ = 0.0;
};

// Nine-operand configuration computing Conway's rule: eight wavelength
// operands plus one spatial.
inline PlaConfig conway_pla_config(const DeviceParams& params = DeviceParams{},
                                   const WavelengthGrid& grid = default_grid()) {
    return make_pla_config(9, {{"next_state", conway_truth_table()}}, grid, params);
}

// Pattern text: one row per line, '.' dead, 'O' live, '#' comment lines.
inline CellGrid parse_pattern(std::istream& is, Boundary boundary = Boundary::kDead) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        rows.push_back(line);
    }
    if (rows.empty())
        throw std::runtime_error("pattern: no rows found");
    const std::size_t width = rows[0].size();
    CellGrid g;
    g.width = static_cast<int>(width);
    g.height = static_cast<int>(rows.size());
    g.boundary = boundary;
    for (const std::string& row : rows) {
        if (row.size() != width)
            throw std::runtime_error("pattern: rows must all have the same width");
        for (char ch : row) {
            if (ch == '.')
                g.cells.push_back(0);
            else if (ch == 'O')
                g.cells.push_back(1);
            else
                throw std::runtime_error(std::string("pattern: invalid character '") + ch +
                                         "' (expected '.' or 'O')");
        }
    }
    g.validate();
    return g;
}

inline CellGrid parse_pattern(const std::string& text, Boundary boundary = Boundary::kDead) {
    std::istringstream is(text);
    return parse_pattern(is, boundary);
}

inline std::string format_pattern(const CellGrid& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.height) * (g.width + 1));
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x)
            out.push_back(g.at(x, y) ? 'O' : '.');
        out.push_back('\n');
    }
    return out;
}

// One pattern block per step, blank line separated.
inline void write_trace(std::ostream& os, const std::vector<CellGrid>& trace) {
    for (std::size_t k = 0; k < trace.size(); ++k) {
        if (k > 0)
            os << "\n";
        os << format_pattern(trace[k]);
    }
}

// Binary PGM, live = 255, dead = 0.
inline void write_pgm(std::ostream& os, const CellGrid& g) {
    os << "P5\n" << g.width << " " << g.height << "\n255\n";
    for (std::uint8_t c : g.cells)
        os.put(c ? static_cast<char>(0xff) : static_cast<char>(0x00));
}

}  // namespace optopla
