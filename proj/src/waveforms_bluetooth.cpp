#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wii/waveforms.hpp"

namespace wii::wave {

namespace {

constexpr double kSampleRate = kNarrowbandRateHz; // 10 MHz
constexpr std::size_t kSps = 10;                  // samples per 1 us symbol
constexpr double kBt = 0.5;                       // Gaussian filter BT product
constexpr double kModIndex = 0.32;                // frequency deviation 2*fd = h/T

// Gaussian lowpass taps with 3 dB bandwidth B = kBt * symbol rate,
// spanning +-2 symbols, normalised to unit sum so a constant +-1 input
// settles to exactly +-1.
std::vector<double> gaussian_taps() {
    const double b_hz = kBt * 1e6;
    const double sigma_t = std::sqrt(std::numbers::ln2) / (2.0 * std::numbers::pi * b_hz);
    const int half = 2 * static_cast<int>(kSps);
    std::vector<double> g(2 * half + 1);
    double sum = 0.0;
    for (int i = -half; i <= half; ++i) {
        const double t = static_cast<double>(i) / kSampleRate;
        g[static_cast<std::size_t>(i + half)] = std::exp(-t * t / (2.0 * sigma_t * sigma_t));
        sum += g[static_cast<std::size_t>(i + half)];
    }
    for (auto& v : g) v /= sum;
    return g;
}

} // namespace

IqStream synth_bluetooth(const std::vector<std::uint8_t>& payload_bits,
                         const WaveformVariant& v, Rng& rng) {
    if (v.technology != Technology::Ieee802_15_1)
        throw std::invalid_argument("synth_bluetooth: variant is not an 802.15.1 mode");
    detail::validate_bits(payload_bits);
    if (payload_bits.size() > v.max_payload_bits)
        throw std::invalid_argument("synth_bluetooth: payload exceeds " + v.mode + " maximum of " +
                                    std::to_string(v.max_payload_bits) + " bits");

    // Two pad symbols replicated at each edge carry the 2 us ramps, so the
    // whole payload region is steady-state modulated.
    const std::size_t ramp_n = ramp_samples(kSampleRate); // 20 = 2 symbols
    std::vector<std::uint8_t> bits;
    bits.reserve(payload_bits.size() + 4);
    bits.push_back(payload_bits.front());
    bits.push_back(payload_bits.front());
    bits.insert(bits.end(), payload_bits.begin(), payload_bits.end());
    bits.push_back(payload_bits.back());
    bits.push_back(payload_bits.back());

    // NRZ at sample rate, bit 0 -> -1 (so an all-zero payload is a tone at
    // -h/2 * symbol rate), edge-replicated for the filter transient.
    static const std::vector<double> g = gaussian_taps();
    const std::size_t half = g.size() / 2;
    const std::size_t n = bits.size() * kSps;
    std::vector<double> nrz(n + 2 * half);
    for (std::size_t i = 0; i < nrz.size(); ++i) {
        const std::size_t j = i < half ? 0 : std::min((i - half) / kSps, bits.size() - 1);
        nrz[i] = bits[j] ? 1.0 : -1.0;
    }

    // Gaussian-filtered frequency track, then phase integration.
    // Instantaneous frequency is (h/2) * symbol_rate * m[k], i.e. a phase
    // increment of pi*h*m[k]/sps per sample.
    IqStream out;
    out.sample_rate_hz = kSampleRate;
    out.samples.resize(n);
    double phase = 2.0 * std::numbers::pi * rng.uniform();
    for (std::size_t k = 0; k < n; ++k) {
        double m = 0.0;
        for (std::size_t t = 0; t < g.size(); ++t) m += g[t] * nrz[k + t];
        phase += std::numbers::pi * kModIndex * m / static_cast<double>(kSps);
        out.samples[k] = std::polar(1.0, phase);
    }

    detail::apply_edge_ramps(out.samples, ramp_n);
    return out;
}

} // namespace wii::wave
