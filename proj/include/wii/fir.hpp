#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wii::dsp {

// Kaiser-windowed FIR design helpers.

// Window shape parameter for a target stopband attenuation in dB.
double kaiser_beta(double atten_db);

// Tap-count estimate for given attenuation and normalised transition
// width (cycles/sample).  Always returns an odd count (linear phase,
// integer group delay).
std::size_t kaiser_tap_estimate(double atten_db, double transition_norm);

// Linear-phase lowpass, cutoff in cycles/sample (0 < cutoff <= 0.5),
// unity DC gain.  n_taps must be odd.
std::vector<double> design_lowpass(std::size_t n_taps, double cutoff_norm, double beta);

// Filter + decimate in one pass, keeping only fully-overlapped (valid)
// output samples: y[m] = sum_k h[k] x[m*decim + k].  Output sample m is
// aligned with input index m*decim + (taps-1)/2.
std::vector<std::complex<double>> filter_decimate(const std::vector<std::complex<double>>& x,
                                                  const std::vector<double>& h,
                                                  std::size_t decim);

// 2x interpolation: zero-stuff then lowpass (cutoff 0.25, gain 2).
// Output has exactly 2*len(x) samples, group-delay centred, with edge
// transients confined to roughly taps/2 samples at each end.
std::vector<std::complex<double>> upsample2(const std::vector<std::complex<double>>& x,
                                            double atten_db = 70.0,
                                            double transition_norm = 0.06);

} // namespace wii::dsp
