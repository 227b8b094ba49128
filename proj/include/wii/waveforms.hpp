#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wii/iq.hpp"
#include "wii/label.hpp"
#include "wii/rng.hpp"

namespace wii::wave {

// Edge ramp applied to every synthesized packet (raised-cosine amplitude
// taper) to bound spectral splatter at the packet boundaries.
inline constexpr double kRampSeconds = 2e-6;

inline std::size_t ramp_samples(double sample_rate_hz) {
    return static_cast<std::size_t>(kRampSeconds * sample_rate_hz + 0.5);
}

// Native synthesis rates.  802.11 is generated wideband and clipped later
// by channelisation.
inline constexpr double kNarrowbandRateHz = 10e6; // 802.15.1 / 802.15.4
inline constexpr double kWidebandRateHz = 40e6;   // 802.11

// One emitter configuration: technology, PHY mode, on-air keying rate
// (chip rate for spread modes, aggregate subcarrier-symbol rate for OFDM)
// and the largest payload a single packet may carry.
struct WaveformVariant {
    Technology technology;
    std::string mode;
    double symbol_rate_hz;
    std::size_t max_payload_bits;
};

// The 19 modelled variants: 12x 802.11 (DSSS, CCK, PBCC, OFDM rates),
// 6x 802.15.1 packet types, 1x 802.15.4 (ACK frame).
const std::vector<WaveformVariant>& variant_catalog();

// Lookup by mode string; throws std::invalid_argument for unknown modes.
const WaveformVariant& find_variant(std::string_view mode);

// Catalog subset for one technology, in catalog order.
std::vector<const WaveformVariant*> variants_for(Technology t);

// Uniformly random payload of the variant's maximum length (bits as 0/1).
std::vector<std::uint8_t> random_payload(const WaveformVariant& v, Rng& rng);

// GFSK, 1 Msym/s, BT = 0.5, modulation index 0.32, 10 MHz output.
// payload_bits is the on-air bit sequence; the random source sets the
// initial carrier phase.
IqStream synth_bluetooth(const std::vector<std::uint8_t>& payload_bits,
                         const WaveformVariant& v, Rng& rng);

// O-QPSK with half-sine chip shaping, 2 Mchip/s, 10 MHz output.
// payload_bits is the MPDU as octet bits (LSB first); SHR and PHR are
// prepended and the whole frame is spread with the 16-ary chip table.
// Fully deterministic: no random source.
IqStream synth_zigbee(const std::vector<std::uint8_t>& payload_bits);

// 802.11 b/g modes at 40 MHz: Barker DSSS, CCK, PBCC (chip-rate spectral
// twin of CCK / 8PSK), OFDM.  The random source sets the initial carrier
// phase.
IqStream synth_wifi(const std::vector<std::uint8_t>& payload_bits,
                    const WaveformVariant& v, Rng& rng);

// Dispatch on the variant's technology.
IqStream synth_packet(const WaveformVariant& v,
                      const std::vector<std::uint8_t>& payload_bits, Rng& rng);

// Internal helpers shared by the modulators (exposed for reuse).
namespace detail {
void apply_edge_ramps(std::vector<std::complex<double>>& x, std::size_t ramp_n);
void validate_bits(const std::vector<std::uint8_t>& bits);
} // namespace detail

} // namespace wii::wave
