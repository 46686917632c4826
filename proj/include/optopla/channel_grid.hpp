#pragma once

// Wavelength-channel address space of the PLA: the bijection between input
// vectors, minterms and channel indices, plus the '+'/'-' square-wave
// partitions driven by each spectral-modulator stage.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace optopla {

// Memory bound: 2^20 channels is the largest grid the toolkit handles.
inline constexpr int kMaxOperands = 20;

// Ordered set of wavelength channels. Channel c sits at start + c * spacing,
// so indices increase with wavelength. channel_count must be a power of two
// for full PLA use (2^N minterms on 2^N channels).
struct WavelengthGrid {
    std::size_t channel_count = 0;
    double start_nm = 0.0;
    double spacing_nm = 0.15;

    double wavelength_nm(std::size_t channel) const {
        return start_nm + static_cast<double>(channel) * spacing_nm;
    }

    void validate() const {
        if (channel_count == 0)
            throw std::invalid_argument("WavelengthGrid: channel_count must be positive");
        if (channel_count > (std::size_t{1} << kMaxOperands))
            throw std::invalid_argument("WavelengthGrid: channel_count exceeds 2^20");
        if (start_nm <= 0.0)
            throw std::invalid_argument("WavelengthGrid: start_wavelength must be positive");
        if (spacing_nm <= 0.0)
            throw std::invalid_argument("WavelengthGrid: spacing must be positive");
    }

    bool operator==(const WavelengthGrid&) const = default;
};

// Pass/block set over a grid. Bit c = 1 means channel c passes.
// Hex form is lowercase, least-significant bit = channel 0, fixed width
// ceil(channel_count / 4) digits.
class ChannelMask {
  public:
    ChannelMask() = default;
    explicit ChannelMask(std::size_t channel_count, bool value = false)
        : bits_(channel_count, value) {}

    static ChannelMask from_bits(std::vector<bool> bits) {
        ChannelMask m;
        m.bits_ = std::move(bits);
        return m;
    }

    static ChannelMask from_hex(std::string_view hex, std::size_t channel_count) {
        const std::size_t want_digits = (channel_count + 3) / 4;
        if (hex.size() != want_digits)
            throw std::invalid_argument("ChannelMask: hex string must have exactly " +
                                        std::to_string(want_digits) + " digits, got " +
                                        std::to_string(hex.size()));
        ChannelMask m(channel_count);
        for (std::size_t d = 0; d < want_digits; ++d) {
            // first character of the string is the most significant nibble
            const char ch = hex[want_digits - 1 - d];
            const int v = hex_value(ch);
            if (v < 0)
                throw std::invalid_argument(std::string("ChannelMask: invalid hex character '") +
                                            ch + "'");
            for (int b = 0; b < 4; ++b) {
                const std::size_t c = 4 * d + static_cast<std::size_t>(b);
                const bool bit = (v >> b) & 1;
                if (c >= channel_count) {
                    if (bit)
                        throw std::invalid_argument(
                            "ChannelMask: hex sets a bit beyond channel_count");
                } else {
                    m.bits_[c] = bit;
                }
            }
        }
        return m;
    }

    std::size_t size() const { return bits_.size(); }

    bool test(std::size_t channel) const { return bits_.at(channel); }

    void set(std::size_t channel, bool value = true) { bits_.at(channel) = value; }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (bool b : bits_)
            n += b ? 1 : 0;
        return n;
    }

    ChannelMask complemented() const {
        ChannelMask m(bits_.size());
        for (std::size_t c = 0; c < bits_.size(); ++c)
            m.bits_[c] = !bits_[c];
        return m;
    }

    ChannelMask operator&(const ChannelMask& rhs) const {
        require_same_size(rhs);
        ChannelMask m(bits_.size());
        for (std::size_t c = 0; c < bits_.size(); ++c)
            m.bits_[c] = bits_[c] && rhs.bits_[c];
        return m;
    }

    ChannelMask operator|(const ChannelMask& rhs) const {
        require_same_size(rhs);
        ChannelMask m(bits_.size());
        for (std::size_t c = 0; c < bits_.size(); ++c)
            m.bits_[c] = bits_[c] || rhs.bits_[c];
        return m;
    }

    bool operator==(const ChannelMask&) const = default;

    std::string to_hex() const {
        const std::size_t digits = (bits_.size() + 3) / 4;
        std::string out(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            int v = 0;
            for (int b = 3; b >= 0; --b) {
                const std::size_t c = 4 * d + static_cast<std::size_t>(b);
                v <<= 1;
                if (c < bits_.size() && bits_[c])
                    v |= 1;
            }
            out[digits - 1 - d] = "0123456789abcdef"[v];
        }
        return out;
    }

    std::vector<std::size_t> set_channels() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < bits_.size(); ++c)
            if (bits_[c])
                out.push_back(c);
        return out;
    }

  private:
    static int hex_value(char c) {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        return -1;
    }

    void require_same_size(const ChannelMask& rhs) const {
        if (bits_.size() != rhs.bits_.size())
            throw std::invalid_argument("ChannelMask: length mismatch");
    }

    std::vector<bool> bits_;
};

// Input vector (x_1 ... x_N); element 0 is x_1, the operand of SM stage 1 and
// the most significant bit of the channel index.
using InputVector = std::vector<std::uint8_t>;

inline void validate_input_vector(const InputVector& x) {
    if (x.empty() || x.size() > kMaxOperands)
        throw std::invalid_argument("InputVector: operand count must be in [1, 20]");
    for (std::uint8_t b : x)
        if (b > 1)
            throw std::invalid_argument("InputVector: bits must be 0 or 1");
}

// c(x) = sum_j x_j * 2^(N-j). Bijective over the 2^N input vectors.
inline std::uint32_t channel_index(const InputVector& x) {
    validate_input_vector(x);
    std::uint32_t c = 0;
    for (std::uint8_t b : x)
        c = (c << 1) | b;
    return c;
}

// Inverse of channel_index.
inline InputVector minterm_of_channel(std::uint32_t channel, int operand_count) {
    if (operand_count < 1 || operand_count > kMaxOperands)
        throw std::invalid_argument("minterm_of_channel: operand count must be in [1, 20]");
    if (channel >= (std::uint32_t{1} << operand_count))
        throw std::out_of_range("minterm_of_channel: channel " + std::to_string(channel) +
                                " out of range for " + std::to_string(operand_count) +
                                " operands");
    InputVector x(static_cast<std::size_t>(operand_count));
    for (int j = 0; j < operand_count; ++j)
        x[static_cast<std::size_t>(j)] = (channel >> (operand_count - 1 - j)) & 1;
    return x;
}

// '+' partition of SM stage j (1-based): passes the channels whose bit (N-j)
// is 1. A square wave of block size 2^(N-j); each later stage halves the
// period of the previous one.
inline ChannelMask plus_set(int stage_index, int operand_count) {
    if (operand_count < 1 || operand_count > kMaxOperands)
        throw std::invalid_argument("plus_set: operand count must be in [1, 20]");
    if (stage_index < 1 || stage_index > operand_count)
        throw std::out_of_range("plus_set: stage index " + std::to_string(stage_index) +
                                " out of range for " + std::to_string(operand_count) +
                                " operands");
    const std::size_t count = std::size_t{1} << operand_count;
    const int bit = operand_count - stage_index;
    ChannelMask m(count);
    for (std::size_t c = 0; c < count; ++c)
        m.set(c, (c >> bit) & 1);
    return m;
}

// "10010011" -> InputVector, first character = x_1.
inline InputVector input_from_string(std::string_view s) {
    InputVector x;
    x.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument(std::string("input bits: invalid character '") + ch +
                                        "' (expected 0 or 1)");
        x.push_back(ch == '1' ? 1 : 0);
    }
    validate_input_vector(x);
    return x;
}

inline std::string input_to_string(const InputVector& x) {
    std::string s;
    s.reserve(x.size());
    for (std::uint8_t b : x)
        s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace optopla
