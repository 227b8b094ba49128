#include "wii/fir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wii::dsp {

namespace {

// Modified Bessel function I0 via its power series; converges fast for
// the beta range used here (< 15).
double bessel_i0(double x) {
    const double h = x / 2.0;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 64; ++k) {
        term *= (h / k) * (h / k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double sinc(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

} // namespace

double kaiser_beta(double atten_db) {
    if (atten_db <= 21.0) return 0.0;
    if (atten_db <= 50.0) return 0.5842 * std::pow(atten_db - 21.0, 0.4) + 0.07886 * (atten_db - 21.0);
    return 0.1102 * (atten_db - 8.7);
}

std::size_t kaiser_tap_estimate(double atten_db, double transition_norm) {
    if (transition_norm <= 0.0 || transition_norm >= 0.5)
        throw std::invalid_argument("kaiser_tap_estimate: transition width out of range");
    const double n = (atten_db - 7.95) / (2.285 * 2.0 * std::numbers::pi * transition_norm);
    std::size_t taps = static_cast<std::size_t>(std::ceil(n)) + 1;
    if (taps % 2 == 0) ++taps;
    return taps;
}

std::vector<double> design_lowpass(std::size_t n_taps, double cutoff_norm, double beta) {
    if (n_taps % 2 == 0) throw std::invalid_argument("design_lowpass: tap count must be odd");
    if (cutoff_norm <= 0.0 || cutoff_norm > 0.5)
        throw std::invalid_argument("design_lowpass: cutoff out of (0, 0.5]");

    const std::ptrdiff_t mid = static_cast<std::ptrdiff_t>(n_taps / 2);
    const double denom = bessel_i0(beta);
    std::vector<double> h(n_taps);
    double sum = 0.0;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_taps); ++i) {
        const double t = static_cast<double>(i - mid);
        const double r = t / static_cast<double>(mid); // [-1, 1]
        const double w = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / denom;
        h[static_cast<std::size_t>(i)] = 2.0 * cutoff_norm * sinc(2.0 * cutoff_norm * t) * w;
        sum += h[static_cast<std::size_t>(i)];
    }
    for (auto& v : h) v /= sum; // exact unity gain at DC
    return h;
}

std::vector<std::complex<double>> filter_decimate(const std::vector<std::complex<double>>& x,
                                                  const std::vector<double>& h,
                                                  std::size_t decim) {
    if (decim == 0) throw std::invalid_argument("filter_decimate: decim must be positive");
    const std::size_t taps = h.size();
    if (x.size() < taps) return {};
    const std::size_t n_out = (x.size() - taps) / decim + 1;
    std::vector<std::complex<double>> y(n_out);
    for (std::size_t m = 0; m < n_out; ++m) {
        const std::complex<double>* xs = x.data() + m * decim;
        double re = 0.0, im = 0.0;
        for (std::size_t k = 0; k < taps; ++k) {
            re += h[k] * xs[k].real();
            im += h[k] * xs[k].imag();
        }
        y[m] = {re, im};
    }
    return y;
}

std::vector<std::complex<double>> upsample2(const std::vector<std::complex<double>>& x,
                                            double atten_db, double transition_norm) {
    const std::size_t taps = kaiser_tap_estimate(atten_db, transition_norm);
    const std::vector<double> h = design_lowpass(taps, 0.25, kaiser_beta(atten_db));
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(taps / 2);
    const std::ptrdiff_t n_in = static_cast<std::ptrdiff_t>(x.size());
    const std::ptrdiff_t n_out = 2 * n_in;
    std::vector<std::complex<double>> y(static_cast<std::size_t>(n_out));
    // Polyphase over the zero-stuffed stream: only even-indexed stuffed
    // samples are nonzero.  Gain 2 restores the original amplitude.
    for (std::ptrdiff_t n = 0; n < n_out; ++n) {
        double re = 0.0, im = 0.0;
        for (std::ptrdiff_t k = (n - half) & 1 ? 1 : 0; k < static_cast<std::ptrdiff_t>(taps); k += 2) {
            const std::ptrdiff_t idx2 = n - half + k; // index into zero-stuffed stream
            const std::ptrdiff_t i = idx2 / 2;
            if (i < 0 || i >= n_in) continue;
            re += h[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(i)].real();
            im += h[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(i)].imag();
        }
        y[static_cast<std::size_t>(n)] = {2.0 * re, 2.0 * im};
    }
    return y;
}

} // namespace wii::dsp
