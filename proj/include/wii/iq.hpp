#pragma once

#include <complex>
#include <vector>

namespace wii {

// Complex baseband sample stream; the signal currency between synthesis,
// channelisation and noise injection.
struct IqStream {
    std::vector<std::complex<double>> samples;
    double sample_rate_hz = 0.0;
};

inline double mean_power(const IqStream& s) {
    if (s.samples.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& v : s.samples) acc += std::norm(v);
    return acc / static_cast<double>(s.samples.size());
}

} // namespace wii
