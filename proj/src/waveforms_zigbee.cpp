#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wii/waveforms.hpp"

namespace wii::wave {

namespace {

constexpr double kSampleRate = kNarrowbandRateHz;  // 10 MHz
constexpr std::size_t kSamplesPerChip = 5;         // 2 Mchip/s
constexpr std::size_t kChipsPerSymbol = 32;
constexpr std::size_t kMaxMpduOctets = 127;

// 2.4 GHz O-QPSK PHY chip table.  Symbols 1..7 are 4-chip right rotations
// of symbol 0; symbols 8..15 reuse 0..7 with the odd-indexed (quadrature)
// chips inverted.
std::array<std::array<std::uint8_t, 32>, 16> build_chip_table() {
    constexpr const char* base = "11011001110000110101001000101110";
    std::array<std::array<std::uint8_t, 32>, 16> table{};
    for (std::size_t s = 0; s < 8; ++s)
        for (std::size_t i = 0; i < 32; ++i)
            table[s][i] = static_cast<std::uint8_t>(base[(i + 32 - 4 * s) % 32] - '0');
    for (std::size_t s = 8; s < 16; ++s)
        for (std::size_t i = 0; i < 32; ++i)
            table[s][i] = (i % 2 == 1) ? static_cast<std::uint8_t>(1 - table[s - 8][i])
                                       : table[s - 8][i];
    return table;
}

void append_octet_symbols(std::vector<std::uint8_t>& symbols, std::uint8_t octet) {
    symbols.push_back(octet & 0x0f);        // low nibble first
    symbols.push_back((octet >> 4) & 0x0f);
}

} // namespace

IqStream synth_zigbee(const std::vector<std::uint8_t>& payload_bits) {
    detail::validate_bits(payload_bits);
    if (payload_bits.size() % 8 != 0)
        throw std::invalid_argument("synth_zigbee: MPDU must be whole octets");
    const std::size_t mpdu_octets = payload_bits.size() / 8;
    if (mpdu_octets > kMaxMpduOctets)
        throw std::invalid_argument("synth_zigbee: MPDU exceeds 127 octets");

    // PPDU: 4-octet preamble, SFD 0xa7, PHR = MPDU length, then the MPDU
    // (octet bits LSB first).
    std::vector<std::uint8_t> symbols;
    for (int i = 0; i < 4; ++i) append_octet_symbols(symbols, 0x00);
    append_octet_symbols(symbols, 0xa7);
    append_octet_symbols(symbols, static_cast<std::uint8_t>(mpdu_octets));
    for (std::size_t o = 0; o < mpdu_octets; ++o) {
        std::uint8_t octet = 0;
        for (int b = 0; b < 8; ++b)
            octet |= static_cast<std::uint8_t>(payload_bits[8 * o + static_cast<std::size_t>(b)] << b);
        append_octet_symbols(symbols, octet);
    }

    static const auto table = build_chip_table();
    std::vector<double> chips;
    chips.reserve(symbols.size() * kChipsPerSymbol + 8);
    // 4 pad chips per edge (20 samples = 2 us) carry the amplitude ramps.
    const std::size_t pad_chips = 4;
    const auto& first_seq = table[symbols.front()];
    for (std::size_t i = 0; i < pad_chips; ++i) chips.push_back(first_seq[0] ? 1.0 : -1.0);
    for (auto s : symbols)
        for (std::size_t i = 0; i < kChipsPerSymbol; ++i) chips.push_back(table[s][i] ? 1.0 : -1.0);
    const double last_chip = chips.back();
    for (std::size_t i = 0; i < pad_chips; ++i) chips.push_back(last_chip);

    // Half-sine O-QPSK: chip k is shaped by sin(pi t / 2Tc) over two chip
    // periods starting at k*Tc; even chips drive I, odd chips drive Q.
    // The interleaved half-sines give a constant envelope away from the
    // packet edges.
    const std::size_t pulse_len = 2 * kSamplesPerChip;
    const std::size_t n = chips.size() * kSamplesPerChip + kSamplesPerChip;
    IqStream out;
    out.sample_rate_hz = kSampleRate;
    out.samples.assign(n, {0.0, 0.0});
    for (std::size_t k = 0; k < chips.size(); ++k) {
        const std::size_t start = k * kSamplesPerChip;
        for (std::size_t m = 0; m < pulse_len && start + m < n; ++m) {
            const double p =
                chips[k] * std::sin(std::numbers::pi * static_cast<double>(m) /
                                    static_cast<double>(pulse_len));
            if (k % 2 == 0)
                out.samples[start + m] += std::complex<double>(p, 0.0);
            else
                out.samples[start + m] += std::complex<double>(0.0, p);
        }
    }

    detail::apply_edge_ramps(out.samples, ramp_samples(kSampleRate));
    return out;
}

} // namespace wii::wave
