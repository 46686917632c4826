#pragma once

// Generators for the demonstrated logic functions: the full decoder, the
// 4-bit comparator, adder and multiplier. Arithmetic operand order is
// (A4..A1, B4..B1) with A4 on SM stage 1, so channel index = 16*a + b.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "optopla/truth_table.hpp"

namespace optopla {

struct NamedTable {
    std::string name;
    TruthTable table;
};

// 2^N singleton tables; output Y<k> is high exactly at input state k.
inline std::vector<NamedTable> decoder_tables(int operand_count) {
    if (operand_count < 1 || operand_count > 16)
        throw std::invalid_argument("decoder: operand count must be in [1, 16]");
    const std::uint32_t states = std::uint32_t{1} << operand_count;
    std::vector<NamedTable> out;
    out.reserve(states);
    for (std::uint32_t k = 0; k < states; ++k) {
        TruthTable tt;
        tt.input_count = operand_count;
        tt.outputs.assign(states, false);
        tt.outputs[k] = true;
        out.push_back({"Y" + std::to_string(k), std::move(tt)});
    }
    return out;
}

namespace detail {

inline std::vector<NamedTable> arithmetic_tables(
    const std::vector<std::string>& names_msb_first,
    std::uint32_t (*value_of)(std::uint32_t a, std::uint32_t b)) {
    const int bits = static_cast<int>(names_msb_first.size());
    std::vector<NamedTable> out;
    out.reserve(names_msb_first.size());
    for (int i = 0; i < bits; ++i) {
        NamedTable nt;
        nt.name = names_msb_first[static_cast<std::size_t>(i)];
        nt.table.input_count = 8;
        nt.table.outputs.resize(256);
        const int bit = bits - 1 - i;  // names are listed MSB first
        for (std::uint32_t a = 0; a < 16; ++a)
            for (std::uint32_t b = 0; b < 16; ++b)
                nt.table.outputs[a * 16 + b] = (value_of(a, b) >> bit) & 1;
        out.push_back(std::move(nt));
    }
    return out;
}

}  // namespace detail

// Three outputs (A>B, A=B, A<B) over (A4..A1, B4..B1).
inline std::vector<NamedTable> comparator4_tables() {
    std::vector<NamedTable> out;
    const char* names[3] = {"A>B", "A=B", "A<B"};
    for (int i = 0; i < 3; ++i) {
        NamedTable nt;
        nt.name = names[i];
        nt.table.input_count = 8;
        nt.table.outputs.resize(256);
        for (std::uint32_t a = 0; a < 16; ++a)
            for (std::uint32_t b = 0; b < 16; ++b) {
                const bool v = i == 0 ? a > b : (i == 1 ? a == b : a < b);
                nt.table.outputs[a * 16 + b] = v;
            }
        out.push_back(std::move(nt));
    }
    return out;
}

// Five outputs O5..O1 with (O5...O1)_2 = a + b.
inline std::vector<NamedTable> adder4_tables() {
    return detail::arithmetic_tables({"O5", "O4", "O3", "O2", "O1"},
                                     [](std::uint32_t a, std::uint32_t b) { return a + b; });
}

// Eight outputs O8..O1 with (O8...O1)_2 = a * b.
inline std::vector<NamedTable> multiplier4_tables() {
    return detail::arithmetic_tables({"O8", "O7", "O6", "O5", "O4", "O3", "O2", "O1"},
                                     [](std::uint32_t a, std::uint32_t b) { return a * b; });
}

inline bool is_stdlib_name(const std::string& name) {
    return name == "decoder" || name == "comparator4" || name == "adder4" ||
           name == "multiplier4";
}

// Dispatch by name. The decoder spans the full operand count of the active
// configuration; the arithmetic functions are fixed eight-operand bundles.
inline std::vector<NamedTable> stdlib_function(const std::string& name, int operand_count) {
    if (name == "decoder")
        return decoder_tables(operand_count);
    if (name == "comparator4" || name == "adder4" || name == "multiplier4") {
        if (operand_count != 8)
            throw std::invalid_argument(name + " requires an 8-operand configuration, got " +
                                        std::to_string(operand_count));
        if (name == "comparator4")
            return comparator4_tables();
        if (name == "adder4")
            return adder4_tables();
        return multiplier4_tables();
    }
    throw std::invalid_argument("unknown stdlib function '" + name + "'");
}

}  // namespace optopla
