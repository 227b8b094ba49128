#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wii/acquisition.hpp"
#include "wii/config.hpp"
#include "wii/dataset.hpp"
#include "wii/label.hpp"
#include "wii/nfsc.hpp"
#include "wii/nn.hpp"

namespace wii::eval {

// A classifier under test: maps one stored example to a class index in
// canonical class_set order, or -1 for "no decision". Must be total and
// deterministic.
using Classifier = std::function<int(const acq::InputMatrix&, acq::Domain)>;

Classifier cnn_classifier(const nn::NetworkSpec& spec, const nn::NetworkParams& params);
Classifier nfsc_classifier(std::vector<nfsc::NfscClassDef> defs);

// Per-class, per-SNR accuracy grid with an aggregate confusion matrix.
// Rows follow the dataset's class order (a prefix of class_set); the
// confusion matrix has one extra trailing column for "no decision",
// which always counts as an error.
struct EvalReport {
    std::vector<double> snr_grid_db;
    std::vector<ClassLabel> classes;
    std::vector<std::vector<double>> accuracy;        // [class][snr]
    std::vector<std::vector<std::uint64_t>> counts;   // [class][snr]
    std::vector<std::vector<std::uint64_t>> confusion; // [class][n_outputs + 1]
    Config metadata;

    // Mean accuracy at one SNR over a class subset (empty = all rows).
    double snr_mean(std::size_t snr_index, const std::vector<std::size_t>& subset = {}) const;
    // The full mean-accuracy curve over the SNR grid.
    std::vector<double> mean_curve(const std::vector<std::size_t>& subset = {}) const;
};

// Runs the model over every example and tallies accuracy per
// (class, SNR) cell. n_outputs bounds the model's class indices and
// sizes the confusion columns. Throws std::invalid_argument on an
// empty dataset, labels outside the model's class set, or predictions
// outside [-1, n_outputs).
EvalReport evaluate(const Classifier& model, std::size_t n_outputs, const data::Dataset& ds,
                    const std::string& model_id = "custom");
EvalReport evaluate(const nn::NetworkSpec& spec, const nn::NetworkParams& params,
                    const data::Dataset& ds);
EvalReport evaluate(const std::vector<nfsc::NfscClassDef>& defs, const data::Dataset& ds);

// Outcome of comparing two accuracy-vs-SNR curves. The SNR gain is the
// horizontal shift between the curves: positive when `a` reaches each
// accuracy level at a lower SNR than `b`. Levels where either curve is
// not invertible (no crossing, several crossings, or a non-increasing
// crossing segment) are excluded and counted.
struct ComparisonMetrics {
    double mean_accuracy_gain_pct = 0.0; // mean over the grid of (a - b), in points
    double snr_gain_db = 0.0;            // NaN when no level is usable
    bool snr_gain_defined = false;
    int excluded_levels = 0;
};

// Accuracy levels sampled when inverting the curves.
std::vector<double> snr_gain_levels();

ComparisonMetrics compare_curves(const std::vector<double>& snr_db,
                                 const std::vector<double>& mean_a,
                                 const std::vector<double>& mean_b);

// Compares two reports over a shared class subset (empty = all).
// Requires identical SNR grids and class lists.
ComparisonMetrics compare(const EvalReport& a, const EvalReport& b,
                          const std::vector<std::size_t>& class_subset = {});

// CSV with a fixed header line; all values rendered as %.6f.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header = nullptr);

// Report CSV layout: snr_db column followed by one accuracy column per
// class, one row per grid SNR.
void write_report_csv(const std::string& path, const EvalReport& report);

// The four canned comparisons.
enum class Experiment {
    AccuracyVsSnr = 0,
    CnnVsNfsc = 1,
    TimeVsFreq = 2,
    OriginalVsReduced = 3,
};

std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

struct ExperimentConfig {
    data::GenerationConfig data; // validation split reuses this with half per_cell
    nn::TrainHyper hyper;
    std::string out_dir = ".";

    static ExperimentConfig from_config(const Config& c);
    Config to_config() const; // dataset keys verbatim, training keys prefixed train_
};

// Convention-over-configuration defaults per experiment; the heavyweight
// original-vs-reduced comparison defaults to a small dataset and budget.
ExperimentConfig default_experiment_config(Experiment e);

// Runs one experiment end to end (generate, train, evaluate, report) and
// returns the paths written, CSV first, metadata sidecar last. All
// outputs are reproducible byte-for-byte from the config.
std::vector<std::string> run_experiment(Experiment e, const ExperimentConfig& cfg);

} // namespace wii::eval
