#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wii/acquisition.hpp"
#include "wii/channel_map.hpp"
#include "wii/config.hpp"
#include "wii/label.hpp"

namespace wii::data {

enum class Split : std::uint8_t { Train = 0, Validation = 1 };

const char* split_name(Split s);

// Everything that determines a generated dataset.  Serialisable to the
// key=value dialect (keys: classes, snr_min, snr_max, snr_step, per_cell,
// domain, n_cnn, seed).
struct GenerationConfig {
    std::size_t classes = kClassCount; // leading entries of class_set
    double snr_min_db = -20.0;
    double snr_max_db = 20.0;
    double snr_step_db = 2.0;
    std::size_t per_cell = 40; // examples per (class, snr) cell
    acq::Domain domain = acq::Domain::Frequency;
    int n_cnn = 3;
    std::uint64_t seed = 1;

    static GenerationConfig from_config(const Config& c);
    Config to_config() const;

    // Inclusive sweep snr_min..snr_max in snr_step increments.
    std::vector<double> snr_grid() const;

    // Throws std::invalid_argument on zero counts, an empty or descending
    // SNR range, too many classes, or a bad window index.
    void validate() const;
};

// One labelled snapshot, stored at file precision: the matrix is already
// normalized and quantized to float32 values, SNR in centi-dB.
struct Example {
    ClassLabel label;
    std::int16_t snr_centi_db = 0;
    acq::InputMatrix matrix;

    bool operator==(const Example&) const = default;
};

struct Dataset {
    Split split = Split::Train;
    GenerationConfig config;
    std::vector<Example> examples;

    bool operator==(const Dataset& other) const;
};

// Synthesize a balanced dataset: per_cell examples for every (class, snr)
// cell, one emitter per snapshot.  Per-example seeds derive from
// (config.seed, split, example index), so the two splits are disjoint
// streams and any example can be regenerated in isolation.
Dataset generate_dataset(const GenerationConfig& cfg, Split split);

// One synthesis pass, both domains: the returned (time, frequency) pair
// is built from identical packets, noise and windows, and each half is
// bit-identical to a generate_dataset call with that domain.
std::pair<Dataset, Dataset> generate_dataset_pair(GenerationConfig cfg, Split split);

// Binary format "WIIDS1": 16-byte header (u16 version, u32 count, u8
// domain, u8 snr-grid length, u64 seed), a length-prefixed config text
// block, then count fixed-width records (u8 technology, u8 rch, i16
// centi-dB SNR, 256 little-endian f32 matrix values).
void save_dataset(const Dataset& d, const std::string& path);
Dataset load_dataset(const std::string& path);

} // namespace wii::data
