#include "wii/nfsc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <string>

#include "wii/errors.hpp"
#include "wii/fft.hpp"

namespace wii::nfsc {

namespace {

constexpr double kPsdFloor = 1e-20;

// Fftshifted spectrum bins of a snapshot in either domain.
std::array<std::complex<double>, kBins> spectrum_bins(const acq::Snapshot& s) {
    if (s.domain == acq::Domain::Frequency) return s.values;
    return acq::to_frequency_domain(s).values;
}

Spectrum psd_of_bins(const std::array<std::complex<double>, kBins>& bins) {
    bool all_zero = true;
    Spectrum out{};
    for (std::size_t i = 0; i < kBins; ++i) {
        const double p = std::norm(bins[i]) / static_cast<double>(kBins);
        if (p != 0.0) all_zero = false;
        out[i] = 10.0 * std::log10(p + kPsdFloor);
    }
    if (all_zero) throw DegenerateInputError("psd: all-zero snapshot");
    return out;
}

double technology_bandwidth_mhz(Technology t) {
    switch (t) {
        case Technology::Ieee802_15_1: return 1.0;
        case Technology::Ieee802_15_4: return 2.0;
        case Technology::Ieee802_11: return 22.0;
    }
    throw std::invalid_argument("technology_bandwidth_mhz: bad technology value");
}

int width_to_bins(double width_mhz) {
    return static_cast<int>(std::llround(width_mhz * 1e6 / kBinWidthHz));
}

NfscClassDef make_def(const ClassLabel& label, double center_mhz, double ref_width_mhz,
                      double threshold, const ChannelMap& map) {
    const double offset_hz = (center_mhz - sensing_center_mhz(map)) * 1e6;
    const int center_bin =
        static_cast<int>(std::llround(kBins / 2.0 + offset_hz / kBinWidthHz));
    NfscClassDef def;
    def.label = label;
    def.center_mhz = center_mhz;
    def.ref_width_mhz = ref_width_mhz;
    def.threshold = threshold;
    def.reference = rect_shape(center_bin, width_to_bins(ref_width_mhz));
    def.filter = rect_shape(center_bin, 2 * width_to_bins(ref_width_mhz));
    return def;
}

} // namespace

SpectralShape rect_shape(int center_bin, int width_bins) {
    if (width_bins < 1) throw std::invalid_argument("rect_shape: width must be >= 1");
    const int lo = std::max(0, center_bin - width_bins / 2);
    const int hi = std::min(static_cast<int>(kBins) - 1, center_bin - width_bins / 2 + width_bins - 1);
    if (lo > hi) throw std::invalid_argument("rect_shape: support is off the grid");
    SpectralShape s;
    s.center_bin = center_bin;
    s.width_bins = hi - lo + 1;
    for (int i = lo; i <= hi; ++i) s.weights[static_cast<std::size_t>(i)] = 1.0;
    return s;
}

Spectrum psd(const acq::Snapshot& s) { return psd_of_bins(spectrum_bins(s)); }

Spectrum psd(const acq::InputMatrix& m, acq::Domain domain) {
    acq::Snapshot s;
    s.values = acq::to_complex(m);
    s.domain = domain;
    return psd(s);
}

Spectrum fuzzify(const Spectrum& p) {
    const auto [mn_it, mx_it] = std::minmax_element(p.begin(), p.end());
    const double mn = *mn_it, mx = *mx_it;
    if (!(mx > mn)) throw DegenerateInputError("fuzzify: flat spectrum");
    Spectrum mu;
    for (std::size_t i = 0; i < kBins; ++i) mu[i] = std::abs((mn - p[i]) / (mn - mx));
    return mu;
}

Spectrum apply_filter(const Spectrum& mu, const SpectralShape& filter) {
    Spectrum out;
    for (std::size_t i = 0; i < kBins; ++i) out[i] = mu[i] * filter.weights[i];
    return out;
}

double similarity(const SpectralShape& reference, const Spectrum& s) {
    double sum_r = 0.0, sum_s = 0.0, sum_min = 0.0;
    for (std::size_t i = 0; i < kBins; ++i) {
        sum_r += reference.weights[i];
        sum_s += s[i];
        sum_min += std::min(reference.weights[i], s[i]);
    }
    if (sum_r <= 0.0) throw std::domain_error("similarity: zero reference shape");
    return sum_min / std::max(sum_r, sum_s);
}

NfscDecision classify(const acq::Snapshot& s, const std::vector<NfscClassDef>& defs) {
    NfscDecision d;
    d.scores.assign(defs.size(), 0.0);

    // Totality: degenerate spectra cannot be matched, so they decide
    // "no class" rather than raising.
    Spectrum mu;
    try {
        mu = fuzzify(psd(s));
    } catch (const DegenerateInputError&) {
        return d;
    }

    for (std::size_t i = 0; i < defs.size(); ++i)
        d.scores[i] = similarity(defs[i].reference, apply_filter(mu, defs[i].filter));
    for (std::size_t i = 0; i < defs.size(); ++i) {
        if (d.scores[i] < defs[i].threshold) continue;
        if (d.decided < 0 || d.scores[i] > d.scores[static_cast<std::size_t>(d.decided)])
            d.decided = static_cast<int>(i);
    }
    return d;
}

NfscDecision classify(const acq::InputMatrix& m, acq::Domain domain,
                      const std::vector<NfscClassDef>& defs) {
    acq::Snapshot s;
    s.values = acq::to_complex(m);
    s.domain = domain;
    return classify(s, defs);
}

std::vector<NfscClassDef> default_class_defs(int n_cnn, bool include_wifi) {
    const ChannelMap map{n_cnn};
    std::vector<NfscClassDef> defs;
    for (const ClassLabel& label : class_set(map)) {
        if (!include_wifi && label.technology == Technology::Ieee802_11) continue;
        const int ach = absolute_channel(label.technology, label.relative_channel, map);
        const double fc = center_frequency_mhz(label.technology, ach);
        defs.push_back(make_def(label, fc, technology_bandwidth_mhz(label.technology), 0.5, map));
    }
    return defs;
}

Config defs_to_config(const std::vector<NfscClassDef>& defs, int n_cnn) {
    Config c;
    c.set_i64("n_cnn", n_cnn);
    c.set_u64("count", defs.size());
    for (std::size_t i = 0; i < defs.size(); ++i) {
        const NfscClassDef& d = defs[i];
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s %d %.17g %.17g %.17g",
                      technology_name(d.label.technology), d.label.relative_channel,
                      d.center_mhz, d.ref_width_mhz, d.threshold);
        c.set("class" + std::to_string(i), buf);
    }
    return c;
}

std::vector<NfscClassDef> defs_from_config(const Config& c) {
    const int n_cnn = static_cast<int>(c.get_i64("n_cnn"));
    const ChannelMap map{n_cnn};
    const std::uint64_t count = c.get_u64("count");
    std::vector<NfscClassDef> defs;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::string line = c.get("class" + std::to_string(i));
        std::istringstream ss(line);
        std::string tech;
        int rch = 0;
        double center = 0.0, width = 0.0, threshold = 0.0;
        if (!(ss >> tech >> rch >> center >> width >> threshold))
            throw std::invalid_argument("nfsc config: malformed class entry: " + line);
        ClassLabel label;
        label.relative_channel = rch;
        if (tech == technology_name(Technology::Ieee802_15_1))
            label.technology = Technology::Ieee802_15_1;
        else if (tech == technology_name(Technology::Ieee802_15_4))
            label.technology = Technology::Ieee802_15_4;
        else if (tech == technology_name(Technology::Ieee802_11))
            label.technology = Technology::Ieee802_11;
        else
            throw std::invalid_argument("nfsc config: unknown technology: " + tech);
        defs.push_back(make_def(label, center, width, threshold, map));
    }
    return defs;
}

} // namespace wii::nfsc
