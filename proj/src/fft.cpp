#include "wii/fft.hpp"

#include <numbers>
#include <stdexcept>

namespace wii::dsp {

void fft_inplace(std::vector<cd>& x, bool inverse) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: length must be a power of two");

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const cd wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cd u = x[i + k];
                const cd v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& v : x) v *= inv;
    }
}

std::vector<cd> fft(std::vector<cd> x, bool inverse) {
    fft_inplace(x, inverse);
    return x;
}

std::vector<cd> fftshift(const std::vector<cd>& x) {
    const std::size_t n = x.size();
    if (n % 2 != 0) throw std::invalid_argument("fftshift: length must be even");
    std::vector<cd> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[(i + n / 2) % n];
    return out;
}

} // namespace wii::dsp
