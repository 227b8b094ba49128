#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>

#include "wii/iq.hpp"
#include "wii/label.hpp"
#include "wii/rng.hpp"

namespace wii::acq {

inline constexpr std::size_t kSnapshotLength = 128;
inline constexpr double kSensingRateHz = 10e6;

// Sentinel for noise-free operation.
inline constexpr double kNoNoiseSnrDb = std::numeric_limits<double>::infinity();

enum class Domain : std::uint8_t { Time = 0, Frequency = 1 };

// 12.8 us capture window: 128 complex samples at the 10 MHz sensing rate,
// either raw or as fftshifted DFT bins (bin i sits at (i - 64) * 78.125 kHz).
struct Snapshot {
    std::array<std::complex<double>, kSnapshotLength> values{};
    Domain domain = Domain::Time;
    ClassLabel label{};
    double snr_db = 0.0;
};

// Classifier input layout: 128 rows x 2 columns, column 0 real, column 1
// imaginary, stored row-major.
struct InputMatrix {
    std::array<double, 2 * kSnapshotLength> v{};

    double& at(std::size_t row, std::size_t col) { return v[row * 2 + col]; }
    double at(std::size_t row, std::size_t col) const { return v[row * 2 + col]; }
    double& re(std::size_t row) { return v[row * 2]; }
    double re(std::size_t row) const { return v[row * 2]; }
    double& im(std::size_t row) { return v[row * 2 + 1]; }
    double im(std::size_t row) const { return v[row * 2 + 1]; }

    bool operator==(const InputMatrix&) const = default;
};

// Anti-alias filter geometry for a given rate pair; exposed so callers can
// map output sample positions back to input regions (each output sample m
// is built from inputs [m*decim, m*decim + n_taps)).
struct ChannelizePlan {
    std::size_t n_taps;
    std::size_t decim;
};

ChannelizePlan plan_channelize(double in_rate_hz, double out_rate_hz);

// Tune to freq_offset_hz and resample: mix by e^{-j 2 pi f t} (content at
// +f lands at DC), low-pass (pass 4.5 MHz at <= 0.1 dB ripple, >= 60 dB
// from just above the passband, always by 5.5 MHz), decimate to
// out_rate_hz.  Only fully-filtered samples are kept.  Throws
// std::out_of_range when |offset| reaches the input Nyquist and
// std::invalid_argument for non-integer rate ratios.
IqStream channelize(const IqStream& stream, double freq_offset_hz,
                    double out_rate_hz = kSensingRateHz);

// Scale to unit mean power.  Throws DegenerateInputError on an all-zero
// stream.
IqStream normalize_power(const IqStream& stream);

// Unit-power signal plus complex white Gaussian noise of per-sample
// variance 10^(-snr_db/10), split evenly between real and imaginary
// parts.  kNoNoiseSnrDb adds nothing (output = normalized input).
IqStream add_awgn(const IqStream& stream, double snr_db, Rng& rng);

// Copy 128 consecutive samples starting at start_index.  Throws
// std::out_of_range when the window leaves the stream.
Snapshot extract_snapshot(const IqStream& stream, std::size_t start_index,
                          const ClassLabel& label = {}, double snr_db = 0.0);

// 128-point DFT of a time snapshot, bins reordered so frequency runs
// -5 MHz .. +5 MHz.  Throws std::invalid_argument if s is already in the
// frequency domain.
Snapshot to_frequency_domain(const Snapshot& s);

InputMatrix to_input_matrix(const Snapshot& s);

// Inverse of to_input_matrix's value layout.
std::array<std::complex<double>, kSnapshotLength> to_complex(const InputMatrix& m);

double frobenius_norm(const InputMatrix& m);

// Scale to unit Frobenius norm.  Throws DegenerateInputError on an
// all-zero matrix.
InputMatrix normalize_input(const InputMatrix& m);

} // namespace wii::acq
