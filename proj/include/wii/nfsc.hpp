#pragma once

#include <array>
#include <vector>

#include "wii/acquisition.hpp"
#include "wii/channel_map.hpp"
#include "wii/config.hpp"
#include "wii/label.hpp"

namespace wii::nfsc {

inline constexpr std::size_t kBins = acq::kSnapshotLength;
inline constexpr double kBinWidthHz = acq::kSensingRateHz / static_cast<double>(kBins);

using Spectrum = std::array<double, kBins>;

// Rectangular spectral template on the 128-bin grid: ones on a contiguous
// support, zeros elsewhere.  width_bins reflects the support actually on
// the grid after clipping.
struct SpectralShape {
    std::array<double, kBins> weights{};
    int center_bin = 0;
    int width_bins = 0;

    bool operator==(const SpectralShape&) const = default;
};

// Rectangle of the requested width centered on center_bin, clipped to the
// grid.  Throws std::invalid_argument when nothing remains on the grid or
// width < 1.
SpectralShape rect_shape(int center_bin, int width_bins);

// One matchable class: a reference rectangle of the channel bandwidth and
// a filter rectangle twice as wide, both centered on the class's center
// frequency, plus the similarity acceptance threshold.
struct NfscClassDef {
    ClassLabel label;
    double center_mhz = 0.0;
    double ref_width_mhz = 0.0;
    double threshold = 0.5;
    SpectralShape reference;
    SpectralShape filter;

    bool operator==(const NfscClassDef&) const = default;
};

// Power spectral density in dB: 10 log10(|B|^2 / 128 + 1e-20) over the
// fftshifted bins B (computed for time snapshots, taken directly for
// frequency snapshots).  Throws DegenerateInputError on all-zero input.
// Input scaling only shifts the result, which the later fuzzification
// cancels, so normalized stored matrices classify identically to raw
// captures.
Spectrum psd(const acq::Snapshot& s);
Spectrum psd(const acq::InputMatrix& m, acq::Domain domain);

// Membership normalization of a dB spectrum:
// mu[n] = |(min P - P[n]) / (min P - max P)|, so the weakest bin maps to
// 0 and the strongest to 1.  Throws DegenerateInputError on a flat
// spectrum.
Spectrum fuzzify(const Spectrum& p);

// Multiplicative spectral mask.
Spectrum apply_filter(const Spectrum& mu, const SpectralShape& filter);

// Similarity of a filtered membership S to a reference shape R:
// SM = sum_n min(R[n], S[n]) / max(sum R, sum S), in [0,1].  Throws
// std::domain_error when the reference weights sum to zero.
double similarity(const SpectralShape& reference, const Spectrum& s);

struct NfscDecision {
    std::vector<double> scores; // one similarity per definition
    int decided = -1;           // index into defs; -1 = no class passed

    bool no_class() const { return decided < 0; }
};

// Thresholded argmax over the per-class similarities (ties resolve to the
// lower index).  Total: degenerate inputs (all-zero or spectrally flat)
// yield a no-class decision instead of an error.
NfscDecision classify(const acq::Snapshot& s, const std::vector<NfscClassDef>& defs);
NfscDecision classify(const acq::InputMatrix& m, acq::Domain domain,
                      const std::vector<NfscClassDef>& defs);

// Class definitions for a sensing window in class_set order: channel
// bandwidths of 1 / 2 / 22 MHz rounded to bins, filters twice as wide,
// threshold 0.5.  include_wifi=false drops the 802.11 entries (their wide
// templates exceed the 10 MHz window and are excluded from baseline
// comparisons).
std::vector<NfscClassDef> default_class_defs(int n_cnn, bool include_wifi = true);

// Key=value round trip: n_cnn, count, and one "class<i>" entry of
// "<technology> <rch> <center_mhz> <ref_width_mhz> <threshold>" per
// definition.
Config defs_to_config(const std::vector<NfscClassDef>& defs, int n_cnn);
std::vector<NfscClassDef> defs_from_config(const Config& c);

} // namespace wii::nfsc
