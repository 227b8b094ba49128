#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wii/fft.hpp"
#include "wii/fir.hpp"
#include "wii/waveforms.hpp"

namespace wii::wave {

namespace {

using cd = std::complex<double>;

constexpr double kSampleRate = kWidebandRateHz; // 40 MHz
constexpr double kChipRate = 11e6;
constexpr double kSamplesPerChip = kSampleRate / kChipRate; // 40/11
constexpr std::size_t kPadChips = 22;                       // 22 * 40/11 = 80 samples = 2 us

const std::array<double, 11> kBarker = {1, -1, 1, 1, -1, 1, 1, 1, -1, -1, -1};

// Raised-cosine chip pulse, rolloff 1 (Nyquist: zero ISI at integer chip
// offsets), spanning +-6 chips.  Tabulated once and read with linear
// interpolation when placing chips on the 40 MHz grid.
constexpr int kPulseSpanChips = 6;
constexpr int kPulseStepsPerChip = 256;

double raised_cosine(double t) {
    const double a = 1.0; // rolloff
    if (std::abs(t) < 1e-9) return 1.0;
    const double d = 1.0 - 4.0 * a * a * t * t;
    if (std::abs(d) < 1e-7) {
        // t = +-1/(2a): limit value (pi/4) sinc(1/(2a))
        const double x = 1.0 / (2.0 * a);
        return std::numbers::pi / 4.0 * std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
    }
    const double s = std::sin(std::numbers::pi * t) / (std::numbers::pi * t);
    return s * std::cos(std::numbers::pi * a * t) / d;
}

const std::vector<double>& pulse_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(2 * kPulseSpanChips * kPulseStepsPerChip + 1);
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double chips =
                static_cast<double>(i) / kPulseStepsPerChip - kPulseSpanChips;
            t[i] = raised_cosine(chips);
        }
        return t;
    }();
    return table;
}

double pulse_at(double chips) {
    if (chips <= -kPulseSpanChips || chips >= kPulseSpanChips) return 0.0;
    const auto& t = pulse_table();
    const double idx = (chips + kPulseSpanChips) * kPulseStepsPerChip;
    const std::size_t i0 = static_cast<std::size_t>(idx);
    const double frac = idx - static_cast<double>(i0);
    return t[i0] * (1.0 - frac) + t[i0 + 1] * frac;
}

// Shape a complex chip sequence (already edge-padded) onto the 40 MHz
// grid; chip k is centred at (k + 0.5) chip periods.
std::vector<cd> shape_chips(const std::vector<cd>& chips) {
    const std::size_t n_out =
        static_cast<std::size_t>(std::ceil(static_cast<double>(chips.size()) * kSamplesPerChip));
    std::vector<cd> out(n_out, cd{0.0, 0.0});
    for (std::size_t k = 0; k < chips.size(); ++k) {
        const double pos = (static_cast<double>(k) + 0.5) * kSamplesPerChip;
        const auto lo = static_cast<std::ptrdiff_t>(std::ceil(pos - kPulseSpanChips * kSamplesPerChip));
        const auto hi = static_cast<std::ptrdiff_t>(std::floor(pos + kPulseSpanChips * kSamplesPerChip));
        for (std::ptrdiff_t n = std::max<std::ptrdiff_t>(lo, 0);
             n <= std::min<std::ptrdiff_t>(hi, static_cast<std::ptrdiff_t>(n_out) - 1); ++n) {
            const double p = pulse_at((static_cast<double>(n) - pos) / kSamplesPerChip);
            out[static_cast<std::size_t>(n)] += chips[k] * p;
        }
    }
    return out;
}

cd qpsk(std::uint8_t b0, std::uint8_t b1) {
    // Phase in quarter turns: 00->0, 01->1, 10->2, 11->3.
    const int q = b0 * 2 + b1;
    return std::polar(1.0, q * std::numbers::pi / 2.0);
}

// CCK codeword from the four phases.
std::array<cd, 8> cck_codeword(double p1, double p2, double p3, double p4) {
    const auto e = [](double p) { return std::polar(1.0, p); };
    return {e(p1 + p2 + p3 + p4), e(p1 + p3 + p4), e(p1 + p2 + p4), -e(p1 + p4),
            e(p1 + p2 + p3), e(p1 + p3), -e(p1 + p2), e(p1)};
}

double qpsk_phase(std::uint8_t b0, std::uint8_t b1) {
    return (b0 * 2 + b1) * std::numbers::pi / 2.0;
}

// 802.11 127-bit scrambler sequence (x^7 + x^4 + 1, seed 1011101).
// Used to decorrelate repeated payload content when a packet's bit demand
// exceeds the payload length.
std::uint8_t scramble_bit(std::size_t i) {
    static const std::vector<std::uint8_t> seq = [] {
        std::vector<std::uint8_t> s(127);
        std::uint8_t state = 0x5d; // 1011101
        for (auto& b : s) {
            const std::uint8_t out = ((state >> 6) ^ (state >> 3)) & 1u;
            state = static_cast<std::uint8_t>(((state << 1) | out) & 0x7f);
            b = out;
        }
        return s;
    }();
    return seq[i % 127];
}

struct BitSource {
    const std::vector<std::uint8_t>& payload;
    std::size_t i = 0;
    std::uint8_t next() {
        const std::uint8_t b =
            static_cast<std::uint8_t>(payload[i % payload.size()] ^ scramble_bit(i));
        ++i;
        return b;
    }
};

// Chip streams for the spread 802.11b modes.  PBCC payload encoding is
// carried by its chip-rate spectral twin: PBCC-5.5M/11M reuse the CCK
// chip construction and PBCC-22M keys 8PSK chips at 11 Mchip/s, which
// reproduces the occupied spectrum without modelling the binary
// convolutional code.
std::vector<cd> make_chips(const std::string& mode, const std::vector<std::uint8_t>& payload) {
    std::vector<cd> chips;
    if (mode == "DSSS-1M") {
        chips.reserve(payload.size() * 11);
        for (auto b : payload) {
            const double s = b ? -1.0 : 1.0;
            for (double c : kBarker) chips.push_back(cd{s * c, 0.0});
        }
    } else if (mode == "DSSS-2M") {
        BitSource src{payload};
        const std::size_t n_sym = (payload.size() + 1) / 2;
        chips.reserve(n_sym * 11);
        for (std::size_t s = 0; s < n_sym; ++s) {
            const cd sym = qpsk(src.next(), src.next());
            for (double c : kBarker) chips.push_back(sym * c);
        }
    } else if (mode == "CCK-5.5M" || mode == "PBCC-5.5M") {
        BitSource src{payload};
        const std::size_t n_sym = (payload.size() + 3) / 4;
        chips.reserve(n_sym * 8);
        for (std::size_t s = 0; s < n_sym; ++s) {
            const double p1 = qpsk_phase(src.next(), src.next());
            const double p2 = src.next() * std::numbers::pi + std::numbers::pi / 2.0;
            const double p4 = src.next() * std::numbers::pi;
            for (const cd& c : cck_codeword(p1, p2, 0.0, p4)) chips.push_back(c);
        }
    } else if (mode == "CCK-11M" || mode == "PBCC-11M") {
        BitSource src{payload};
        const std::size_t n_sym = (payload.size() + 7) / 8;
        chips.reserve(n_sym * 8);
        for (std::size_t s = 0; s < n_sym; ++s) {
            const double p1 = qpsk_phase(src.next(), src.next());
            const double p2 = qpsk_phase(src.next(), src.next());
            const double p3 = qpsk_phase(src.next(), src.next());
            const double p4 = qpsk_phase(src.next(), src.next());
            for (const cd& c : cck_codeword(p1, p2, p3, p4)) chips.push_back(c);
        }
    } else if (mode == "PBCC-22M") {
        BitSource src{payload};
        const std::size_t n_chip = (payload.size() + 1) / 2;
        chips.reserve(n_chip);
        for (std::size_t k = 0; k < n_chip; ++k) {
            const int idx = src.next() * 4 + src.next() * 2 + scramble_bit(k);
            chips.push_back(std::polar(1.0, idx * std::numbers::pi / 4.0));
        }
    } else {
        throw std::invalid_argument("synth_wifi: unknown mode '" + mode + "'");
    }
    return chips;
}

struct OfdmMode {
    std::size_t info_bits_per_symbol;
    std::size_t bits_per_subcarrier;
};

OfdmMode ofdm_mode(const std::string& mode) {
    if (mode == "OFDM-6M") return {24, 1};
    if (mode == "OFDM-12M") return {48, 2};
    if (mode == "OFDM-24M") return {96, 4};
    if (mode == "OFDM-48M") return {192, 6};
    if (mode == "OFDM-54M") return {216, 6};
    throw std::invalid_argument("synth_wifi: unknown mode '" + mode + "'");
}

cd gray_axis_16(std::uint8_t b0, std::uint8_t b1, double scale) {
    static const double lvl[4] = {-3, -1, 3, 1}; // Gray order 00,01,10,11
    return {lvl[b0 * 2 + b1] * scale, 0.0};
}

double gray_axis_64(std::uint8_t b0, std::uint8_t b1, std::uint8_t b2) {
    static const double lvl[8] = {-7, -5, -1, -3, 7, 5, 1, 3}; // Gray order
    return lvl[b0 * 4 + b1 * 2 + b2];
}

cd map_subcarrier(BitSource& src, std::size_t bpsc) {
    switch (bpsc) {
        case 1: return {src.next() ? 1.0 : -1.0, 0.0};
        case 2: {
            const double i = src.next() ? 1.0 : -1.0;
            const double q = src.next() ? 1.0 : -1.0;
            return cd{i, q} / std::sqrt(2.0);
        }
        case 4: {
            const cd i = gray_axis_16(src.next(), src.next(), 1.0);
            const cd q = gray_axis_16(src.next(), src.next(), 1.0);
            return cd{i.real(), q.real()} / std::sqrt(10.0);
        }
        case 6: {
            const double i = gray_axis_64(src.next(), src.next(), src.next());
            const double q = gray_axis_64(src.next(), src.next(), src.next());
            return cd{i, q} / std::sqrt(42.0);
        }
        default: throw std::invalid_argument("map_subcarrier: bad bits per subcarrier");
    }
}

// 64-point OFDM symbols at 20 MHz (52 occupied bins, 16-sample cyclic
// prefix), then 2x interpolation to the 40 MHz wideband grid.
std::vector<cd> make_ofdm(const std::string& mode, const std::vector<std::uint8_t>& payload) {
    const OfdmMode m = ofdm_mode(mode);
    const std::size_t n_sym =
        (payload.size() + m.info_bits_per_symbol - 1) / m.info_bits_per_symbol + 2; // + edge pads

    static const std::array<int, 4> pilots = {-21, -7, 7, 21};
    static const std::array<double, 4> pilot_val = {1.0, 1.0, 1.0, -1.0};

    BitSource src{payload};
    std::vector<cd> stream20;
    stream20.reserve(n_sym * 80);
    std::vector<cd> bins(64);
    for (std::size_t s = 0; s < n_sym; ++s) {
        std::fill(bins.begin(), bins.end(), cd{0.0, 0.0});
        for (std::size_t p = 0; p < pilots.size(); ++p)
            bins[static_cast<std::size_t>((64 + pilots[p]) % 64)] = cd{pilot_val[p], 0.0};
        for (int k = -26; k <= 26; ++k) {
            if (k == 0 || k == 7 || k == -7 || k == 21 || k == -21) continue;
            bins[static_cast<std::size_t>((64 + k) % 64)] = map_subcarrier(src, m.bits_per_subcarrier);
        }
        const std::vector<cd> sym = dsp::fft(bins, true); // inverse
        for (std::size_t i = 48; i < 64; ++i) stream20.push_back(sym[i]); // cyclic prefix
        stream20.insert(stream20.end(), sym.begin(), sym.end());
    }
    return dsp::upsample2(stream20);
}

} // namespace

IqStream synth_wifi(const std::vector<std::uint8_t>& payload_bits,
                    const WaveformVariant& v, Rng& rng) {
    if (v.technology != Technology::Ieee802_11)
        throw std::invalid_argument("synth_wifi: variant is not an 802.11 mode");
    detail::validate_bits(payload_bits);
    if (payload_bits.size() > v.max_payload_bits)
        throw std::invalid_argument("synth_wifi: payload exceeds maximum of " +
                                    std::to_string(v.max_payload_bits) + " bits");

    const double phi0 = 2.0 * std::numbers::pi * rng.uniform();

    IqStream out;
    out.sample_rate_hz = kSampleRate;
    if (v.mode.rfind("OFDM", 0) == 0) {
        out.samples = make_ofdm(v.mode, payload_bits);
    } else {
        std::vector<cd> chips = make_chips(v.mode, payload_bits);
        // Edge-replicated pad chips fill the 2 us ramp regions.
        std::vector<cd> padded;
        padded.reserve(chips.size() + 2 * kPadChips);
        padded.insert(padded.end(), kPadChips, chips.front());
        padded.insert(padded.end(), chips.begin(), chips.end());
        padded.insert(padded.end(), kPadChips, chips.back());
        out.samples = shape_chips(padded);
    }

    const std::size_t ramp_n = ramp_samples(kSampleRate);
    if (out.samples.size() < 2 * ramp_n + 8)
        throw std::invalid_argument("synth_wifi: payload too short for a valid packet");

    // Unit mean power over the packet body, random initial carrier phase.
    double power = 0.0;
    for (std::size_t i = ramp_n; i < out.samples.size() - ramp_n; ++i)
        power += std::norm(out.samples[i]);
    power /= static_cast<double>(out.samples.size() - 2 * ramp_n);
    const cd scale = std::polar(1.0 / std::sqrt(power), phi0);
    for (auto& x : out.samples) x *= scale;

    detail::apply_edge_ramps(out.samples, ramp_n);
    return out;
}

} // namespace wii::wave
