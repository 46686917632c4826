#pragma once

// Truth tables in channel order: entry c is the function value at the minterm
// carried by wavelength channel c. A table compiles to a waveshaper mask by
// identity - every minterm owns one channel, so no minimization is needed.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "optopla/bool_expr.hpp"
#include "optopla/channel_grid.hpp"

namespace optopla {

struct TruthTable {
    int input_count = 0;
    std::vector<bool> outputs;  // length 2^input_count, index = channel

    bool at(std::uint32_t channel) const { return outputs.at(channel); }

    bool lookup(const InputVector& x) const {
        if (static_cast<int>(x.size()) != input_count)
            throw std::invalid_argument("TruthTable::lookup: operand count mismatch");
        return outputs[channel_index(x)];
    }

    std::size_t minterm_count() const {
        std::size_t n = 0;
        for (bool b : outputs)
            n += b ? 1 : 0;
        return n;
    }

    void validate() const {
        if (input_count < 1 || input_count > kMaxOperands)
            throw std::invalid_argument("TruthTable: input count must be in [1, 20]");
        if (outputs.size() != (std::size_t{1} << input_count))
            throw std::invalid_argument("TruthTable: expected 2^" +
                                        std::to_string(input_count) + " entries, got " +
                                        std::to_string(outputs.size()));
    }

    bool operator==(const TruthTable&) const = default;
};

// Tabulate an expression over all assignments; variable i of the declared
// list is operand i+1, so channel order falls out of minterm_of_channel.
inline TruthTable truth_table(const BoolExpr& expr, int variable_count) {
    if (variable_count < 1 || variable_count > kMaxOperands)
        throw std::invalid_argument("truth_table: variable count must be in [1, 20]");
    TruthTable tt;
    tt.input_count = variable_count;
    const std::uint32_t rows = std::uint32_t{1} << variable_count;
    tt.outputs.resize(rows);
    for (std::uint32_t c = 0; c < rows; ++c)
        tt.outputs[c] = eval_expr(expr, minterm_of_channel(c, variable_count));
    return tt;
}

// The mask is the truth table in channel order.
inline ChannelMask compile_mask(const TruthTable& tt) {
    tt.validate();
    return ChannelMask::from_bits(tt.outputs);
}

inline TruthTable table_from_mask(const ChannelMask& mask, int input_count) {
    TruthTable tt;
    tt.input_count = input_count;
    tt.outputs.resize(mask.size());
    for (std::size_t c = 0; c < mask.size(); ++c)
        tt.outputs[c] = mask.test(c);
    tt.validate();
    return tt;
}

// Table file format: first line "N=<int>", second line the hex bitmask
// (lowercase, LSB = channel 0).
inline void write_table(std::ostream& os, const TruthTable& tt) {
    tt.validate();
    os << "N=" << tt.input_count << "\n" << compile_mask(tt).to_hex() << "\n";
}

inline TruthTable read_table(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("truth table file: missing header line");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
    if (line.rfind("N=", 0) != 0)
        throw std::runtime_error("truth table file: first line must be N=<int>");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::runtime_error("truth table file: malformed operand count '" + line + "'");
    }
    if (n < 1 || n > kMaxOperands)
        throw std::runtime_error("truth table file: operand count must be in [1, 20]");
    std::string hex;
    if (!std::getline(is, hex))
        throw std::runtime_error("truth table file: missing mask line");
    while (!hex.empty() && (hex.back() == '\r' || hex.back() == ' '))
        hex.pop_back();
    const std::size_t channels = std::size_t{1} << n;
    return table_from_mask(ChannelMask::from_hex(hex, channels), n);
}

inline std::string table_to_string(const TruthTable& tt) {
    std::ostringstream os;
    write_table(os, tt);
    return os.str();
}

inline TruthTable table_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_table(is);
}

}  // namespace optopla
