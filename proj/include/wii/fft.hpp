#pragma once

#include <complex>
#include <vector>

namespace wii::dsp {

using cd = std::complex<double>;

// In-place radix-2 FFT, n must be a power of two.  Forward transform is
// unnormalised (sum convention); inverse scales by 1/n, so
// ifft(fft(x)) == x.
void fft_inplace(std::vector<cd>& x, bool inverse = false);

std::vector<cd> fft(std::vector<cd> x, bool inverse = false);

// Reorders DFT bins so frequency increases from -fs/2 to +fs/2-df;
// out[i] = in[(i + n/2) mod n].  n must be even.
std::vector<cd> fftshift(const std::vector<cd>& x);

} // namespace wii::dsp
