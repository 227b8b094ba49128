#include "wii/waveforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wii::wave {

const std::vector<WaveformVariant>& variant_catalog() {
    // Payload limits: 802.11 uses the 2304-octet MPDU maximum for every
    // mode; 802.15.1 limits are the per-packet-type user payload sizes
    // (27/183/339 octets for DH1/3/5, 10/30/30 for HV1/HV3/EV3); the
    // 802.15.4 entry is the 5-octet ACK MPDU.
    static const std::vector<WaveformVariant> catalog = {
        {Technology::Ieee802_11, "DSSS-1M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "DSSS-2M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "CCK-5.5M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "CCK-11M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "PBCC-5.5M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "PBCC-11M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "PBCC-22M", 11e6, 2304u * 8u},
        {Technology::Ieee802_11, "OFDM-6M", 12e6, 2304u * 8u},
        {Technology::Ieee802_11, "OFDM-12M", 12e6, 2304u * 8u},
        {Technology::Ieee802_11, "OFDM-24M", 12e6, 2304u * 8u},
        {Technology::Ieee802_11, "OFDM-48M", 12e6, 2304u * 8u},
        {Technology::Ieee802_11, "OFDM-54M", 12e6, 2304u * 8u},
        {Technology::Ieee802_15_1, "ACL-DH1", 1e6, 27u * 8u},
        {Technology::Ieee802_15_1, "ACL-DH3", 1e6, 183u * 8u},
        {Technology::Ieee802_15_1, "ACL-DH5", 1e6, 339u * 8u},
        {Technology::Ieee802_15_1, "SCO-HV1", 1e6, 10u * 8u},
        {Technology::Ieee802_15_1, "SCO-HV3", 1e6, 30u * 8u},
        {Technology::Ieee802_15_1, "eSCO-EV3", 1e6, 30u * 8u},
        {Technology::Ieee802_15_4, "ACK", 2e6, 5u * 8u},
    };
    return catalog;
}

const WaveformVariant& find_variant(std::string_view mode) {
    for (const auto& v : variant_catalog())
        if (v.mode == mode) return v;
    throw std::invalid_argument("find_variant: unknown mode '" + std::string(mode) + "'");
}

std::vector<const WaveformVariant*> variants_for(Technology t) {
    std::vector<const WaveformVariant*> out;
    for (const auto& v : variant_catalog())
        if (v.technology == t) out.push_back(&v);
    return out;
}

std::vector<std::uint8_t> random_payload(const WaveformVariant& v, Rng& rng) {
    std::vector<std::uint8_t> bits(v.max_payload_bits);
    for (auto& b : bits) b = rng.bit() ? 1 : 0;
    return bits;
}

IqStream synth_packet(const WaveformVariant& v,
                      const std::vector<std::uint8_t>& payload_bits, Rng& rng) {
    switch (v.technology) {
        case Technology::Ieee802_15_1: return synth_bluetooth(payload_bits, v, rng);
        case Technology::Ieee802_15_4: return synth_zigbee(payload_bits);
        case Technology::Ieee802_11: return synth_wifi(payload_bits, v, rng);
    }
    throw std::invalid_argument("synth_packet: bad technology value");
}

namespace detail {

void apply_edge_ramps(std::vector<std::complex<double>>& x, std::size_t ramp_n) {
    if (x.size() < 2 * ramp_n) throw std::invalid_argument("apply_edge_ramps: stream too short");
    for (std::size_t k = 0; k < ramp_n; ++k) {
        const double env =
            0.5 * (1.0 - std::cos(std::numbers::pi * (static_cast<double>(k) + 0.5) /
                                  static_cast<double>(ramp_n)));
        x[k] *= env;
        x[x.size() - 1 - k] *= env;
    }
}

void validate_bits(const std::vector<std::uint8_t>& bits) {
    if (bits.empty()) throw std::invalid_argument("payload must contain at least one bit");
    for (auto b : bits)
        if (b > 1) throw std::invalid_argument("payload bits must be 0 or 1");
}

} // namespace detail

} // namespace wii::wave
