#include "wii/acquisition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wii/errors.hpp"
#include "wii/fft.hpp"
#include "wii/fir.hpp"

namespace wii::acq {

namespace {

using cd = std::complex<double>;

constexpr double kPassHz = 4.5e6;
constexpr double kDesignAttenDb = 70.0; // margin over the 60 dB requirement

// Stopband start: tight against the passband so an emitter parked on the
// band edge visibly loses its outer skirt, and strictly inside the 10 MHz
// output Nyquist so nothing aliases back in-band.
constexpr double kStopHz = kPassHz + 0.15e6;

} // namespace

ChannelizePlan plan_channelize(double in_rate_hz, double out_rate_hz) {
    if (out_rate_hz <= 0.0 || out_rate_hz > in_rate_hz)
        throw std::invalid_argument("channelize: output rate must be in (0, input rate]");
    const double ratio = in_rate_hz / out_rate_hz;
    const auto decim = static_cast<std::size_t>(std::llround(ratio));
    if (std::abs(ratio - static_cast<double>(decim)) > 1e-9)
        throw std::invalid_argument("channelize: rate ratio must be an integer");
    if (out_rate_hz < 2.0 * kStopHz)
        throw std::invalid_argument("channelize: output rate below twice the filter stopband");
    const double transition = (kStopHz - kPassHz) / in_rate_hz;
    return {dsp::kaiser_tap_estimate(kDesignAttenDb, transition), decim};
}

IqStream channelize(const IqStream& stream, double freq_offset_hz, double out_rate_hz) {
    if (!(std::abs(freq_offset_hz) < stream.sample_rate_hz / 2.0))
        throw std::out_of_range("channelize: frequency offset beyond input Nyquist");
    const ChannelizePlan plan = plan_channelize(stream.sample_rate_hz, out_rate_hz);

    const double cutoff = (kPassHz + kStopHz) / 2.0 / stream.sample_rate_hz;
    const std::vector<double> h =
        dsp::design_lowpass(plan.n_taps, cutoff, dsp::kaiser_beta(kDesignAttenDb));

    std::vector<cd> mixed(stream.samples.size());
    const double w = -2.0 * std::numbers::pi * freq_offset_hz / stream.sample_rate_hz;
    for (std::size_t n = 0; n < mixed.size(); ++n)
        mixed[n] = stream.samples[n] * std::polar(1.0, w * static_cast<double>(n));

    IqStream out;
    out.sample_rate_hz = out_rate_hz;
    out.samples = dsp::filter_decimate(mixed, h, plan.decim);
    return out;
}

IqStream normalize_power(const IqStream& stream) {
    const double p = mean_power(stream);
    if (!(p > 0.0)) throw DegenerateInputError("normalize_power: zero-power stream");
    IqStream out = stream;
    const double s = 1.0 / std::sqrt(p);
    for (auto& x : out.samples) x *= s;
    return out;
}

IqStream add_awgn(const IqStream& stream, double snr_db, Rng& rng) {
    IqStream out = normalize_power(stream);
    if (snr_db == kNoNoiseSnrDb) return out;
    const double noise_power = std::pow(10.0, -snr_db / 10.0);
    const double sigma_part = std::sqrt(noise_power / 2.0); // per real/imag part
    for (auto& x : out.samples) {
        const auto [g_re, g_im] = rng.gaussian_pair();
        x += cd{g_re * sigma_part, g_im * sigma_part};
    }
    return out;
}

Snapshot extract_snapshot(const IqStream& stream, std::size_t start_index,
                          const ClassLabel& label, double snr_db) {
    if (start_index + kSnapshotLength > stream.samples.size())
        throw std::out_of_range("extract_snapshot: window exceeds stream (start " +
                                std::to_string(start_index) + ", length " +
                                std::to_string(stream.samples.size()) + ")");
    Snapshot s;
    s.domain = Domain::Time;
    s.label = label;
    s.snr_db = snr_db;
    for (std::size_t i = 0; i < kSnapshotLength; ++i) s.values[i] = stream.samples[start_index + i];
    return s;
}

Snapshot to_frequency_domain(const Snapshot& s) {
    if (s.domain != Domain::Time)
        throw std::invalid_argument("to_frequency_domain: snapshot is not time-domain");
    std::vector<cd> x(s.values.begin(), s.values.end());
    dsp::fft_inplace(x);
    const std::vector<cd> shifted = dsp::fftshift(x);
    Snapshot out = s;
    out.domain = Domain::Frequency;
    for (std::size_t i = 0; i < kSnapshotLength; ++i) out.values[i] = shifted[i];
    return out;
}

InputMatrix to_input_matrix(const Snapshot& s) {
    InputMatrix m;
    for (std::size_t i = 0; i < kSnapshotLength; ++i) {
        m.re(i) = s.values[i].real();
        m.im(i) = s.values[i].imag();
    }
    return m;
}

std::array<cd, kSnapshotLength> to_complex(const InputMatrix& m) {
    std::array<cd, kSnapshotLength> out;
    for (std::size_t i = 0; i < kSnapshotLength; ++i) out[i] = {m.re(i), m.im(i)};
    return out;
}

double frobenius_norm(const InputMatrix& m) {
    double s = 0.0;
    for (double x : m.v) s += x * x;
    return std::sqrt(s);
}

InputMatrix normalize_input(const InputMatrix& m) {
    const double norm = frobenius_norm(m);
    if (norm < 1e-12) throw DegenerateInputError("normalize_input: all-zero matrix");
    InputMatrix out = m;
    for (double& x : out.v) x /= norm;
    return out;
}

} // namespace wii::acq
