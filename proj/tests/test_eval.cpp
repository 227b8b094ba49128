#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "wii/channel_map.hpp"
#include "wii/errors.hpp"
#include "wii/eval.hpp"
#include "wii/io.hpp"

using namespace wii;
using namespace wii::eval;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / "wii_eval_tests";
    fs::create_directories(p);
    return p;
}

// 15 classes x {-20, 0, +20} dB x 1 example, shared across cases.
const data::Dataset& oracle_dataset() {
    static const data::Dataset ds = [] {
        data::GenerationConfig cfg;
        cfg.snr_min_db = -20.0;
        cfg.snr_max_db = 20.0;
        cfg.snr_step_db = 20.0;
        cfg.per_cell = 1;
        cfg.seed = 7;
        return data::generate_dataset(cfg, data::Split::Validation);
    }();
    return ds;
}

// Answers with the true label of the i-th example; valid because
// evaluate() visits examples in storage order.
Classifier oracle_for(const data::Dataset& ds) {
    auto next = std::make_shared<std::size_t>(0);
    return [&ds, next](const acq::InputMatrix&, acq::Domain) {
        return class_index(ds.examples[(*next)++].label);
    };
}

Classifier constant_classifier(int value) {
    return [value](const acq::InputMatrix&, acq::Domain) { return value; };
}

std::vector<double> logistic_curve(const std::vector<double>& snr, double midpoint_db) {
    std::vector<double> c;
    for (double s : snr) c.push_back(1.0 / (1.0 + std::exp(-(s - midpoint_db) / 3.0)));
    return c;
}

EvalReport handmade_report(std::vector<std::vector<double>> accuracy, std::vector<double> grid) {
    EvalReport r;
    r.snr_grid_db = std::move(grid);
    const auto set = class_set(ChannelMap{3});
    for (std::size_t i = 0; i < accuracy.size(); ++i) r.classes.push_back(set[i]);
    r.accuracy = std::move(accuracy);
    return r;
}

} // namespace

TEST_CASE("a perfect oracle scores one everywhere") {
    const data::Dataset& ds = oracle_dataset();
    const EvalReport r = evaluate(oracle_for(ds), kClassCount, ds, "oracle");

    REQUIRE(r.classes.size() == 15);
    REQUIRE(r.snr_grid_db == std::vector<double>{-20.0, 0.0, 20.0});
    for (const auto& row : r.accuracy)
        for (double a : row) CHECK(a == 1.0);
    for (std::size_t c = 0; c < 15; ++c) {
        CHECK(r.confusion[c][c] == 3);
        std::uint64_t row_sum = 0, cell_sum = 0;
        for (std::uint64_t v : r.confusion[c]) row_sum += v;
        for (std::uint64_t v : r.counts[c]) cell_sum += v;
        CHECK(row_sum == cell_sum);
        CHECK(cell_sum == 3);
    }
    CHECK(r.metadata.get("model") == "oracle");
    CHECK(r.metadata.get_u64("no_class") == 0);
    CHECK(r.metadata.get_u64("examples") == 45);
    CHECK(r.metadata.get("data_domain") == "frequency");
}

TEST_CASE("a constant model scores chance level on balanced data") {
    const data::Dataset& ds = oracle_dataset();
    const EvalReport r = evaluate(constant_classifier(0), kClassCount, ds, "constant");
    for (std::size_t s = 0; s < 3; ++s)
        CHECK(r.snr_mean(s) == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    for (std::size_t c = 0; c < 15; ++c) CHECK(r.confusion[c][0] == 3);
}

TEST_CASE("refusing every example counts as error") {
    const data::Dataset& ds = oracle_dataset();
    const EvalReport r = evaluate(constant_classifier(-1), kClassCount, ds, "mute");
    for (const auto& row : r.accuracy)
        for (double a : row) CHECK(a == 0.0);
    for (std::size_t c = 0; c < 15; ++c) CHECK(r.confusion[c][15] == 3);
    CHECK(r.metadata.get_u64("no_class") == 45);
}

TEST_CASE("evaluate rejects bad inputs") {
    const data::Dataset& ds = oracle_dataset();
    data::Dataset empty = ds;
    empty.examples.clear();
    CHECK_THROWS_AS(evaluate(constant_classifier(0), kClassCount, empty, "m"), std::invalid_argument);
    // Model with fewer outputs than the dataset has classes.
    CHECK_THROWS_AS(evaluate(constant_classifier(0), 3, ds, "m"), std::invalid_argument);
    // Predictions outside the declared range.
    CHECK_THROWS_AS(evaluate(constant_classifier(99), kClassCount, ds, "m"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(Classifier{}, kClassCount, ds, "m"), std::invalid_argument);
}

TEST_CASE("the cnn adapter is deterministic and well-formed") {
    data::GenerationConfig cfg;
    cfg.classes = 2;
    cfg.snr_min_db = cfg.snr_max_db = 10.0;
    cfg.per_cell = 2;
    cfg.seed = 11;
    const data::Dataset ds = data::generate_dataset(cfg, data::Split::Validation);

    const nn::NetworkSpec spec = nn::reduced_spec();
    const nn::NetworkParams params = nn::init_params(spec, 5);
    const EvalReport a = evaluate(spec, params, ds);
    const EvalReport b = evaluate(spec, params, ds);
    CHECK(a.accuracy == b.accuracy);
    CHECK(a.confusion == b.confusion);
    CHECK(a.metadata.get("model") == "cnn-reduced");
    REQUIRE(a.classes.size() == 2);
    REQUIRE(a.confusion[0].size() == 16);
    for (const auto& row : a.accuracy)
        for (double v : row) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
}

TEST_CASE("the nfsc adapter maps decisions onto canonical classes") {
    data::GenerationConfig cfg;
    cfg.classes = 11;
    cfg.snr_min_db = cfg.snr_max_db = 20.0;
    cfg.per_cell = 1;
    cfg.seed = 202;
    const data::Dataset ds = data::generate_dataset(cfg, data::Split::Validation);

    const EvalReport r = evaluate(nfsc::default_class_defs(3), ds);
    CHECK(r.metadata.get("model") == "nfsc");
    CHECK(r.metadata.get_u64("nfsc_defs") == 15);
    REQUIRE(r.accuracy.size() == 11);
    // The strong 802.15.4 channel-0 example lands on its own class.
    CHECK(r.accuracy[10][0] == 1.0);
    CHECK(r.confusion[10][10] == 1);
}

TEST_CASE("identical curves compare as exactly zero") {
    const std::vector<double> snr{-10, -5, 0, 5, 10};
    const std::vector<double> flat(5, 0.4);
    const ComparisonMetrics m = compare_curves(snr, flat, flat);
    CHECK(m.mean_accuracy_gain_pct == 0.0);
    CHECK(m.snr_gain_db == 0.0);
    CHECK(m.snr_gain_defined);
    CHECK(m.excluded_levels == 0);
}

TEST_CASE("a 4 dB horizontal shift is recovered from the curves") {
    std::vector<double> snr;
    for (int s = -20; s <= 20; s += 2) snr.push_back(s);
    const std::vector<double> a = logistic_curve(snr, -2.0);
    const std::vector<double> b = logistic_curve(snr, 2.0);
    const ComparisonMetrics m = compare_curves(snr, a, b);
    REQUIRE(m.snr_gain_defined);
    CHECK(m.snr_gain_db == doctest::Approx(4.0).epsilon(0.025));
    CHECK(m.excluded_levels == 0);
    CHECK(m.mean_accuracy_gain_pct > 0.0);
}

TEST_CASE("flat and non-monotonic curves leave the snr gain undefined") {
    const std::vector<double> snr{-10, -5, 0, 5, 10};
    const std::vector<double> ones(5, 1.0);
    const std::vector<double> zeros(5, 0.0);
    const ComparisonMetrics m = compare_curves(snr, ones, zeros);
    CHECK(m.mean_accuracy_gain_pct == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(!m.snr_gain_defined);
    CHECK(std::isnan(m.snr_gain_db));
    CHECK(m.excluded_levels == 15);

    // A tent curve crosses every level twice, so no level is usable.
    const std::vector<double> tent{0.0, 0.5, 1.0, 0.5, 0.0};
    const std::vector<double> rise{0.0, 0.25, 0.5, 0.75, 1.0};
    const ComparisonMetrics t = compare_curves(snr, tent, rise);
    CHECK(!t.snr_gain_defined);
    CHECK(t.excluded_levels == 15);

    CHECK_THROWS_AS(compare_curves(snr, ones, std::vector<double>(4, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(compare_curves({}, {}, {}), std::invalid_argument);
}

TEST_CASE("report means honour class subsets") {
    const EvalReport r = handmade_report({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}}, {0.0, 10.0});
    CHECK(r.snr_mean(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.mean_curve({0})[1] == 0.0);
    CHECK(r.snr_mean(0, {0, 2}) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(r.snr_mean(0, {7}), std::invalid_argument);
    CHECK_THROWS_AS(r.snr_mean(5), std::invalid_argument);

    EvalReport other = r;
    const ComparisonMetrics same = compare(r, other);
    CHECK(same.mean_accuracy_gain_pct == 0.0);
    CHECK(same.snr_gain_db == 0.0);

    other.snr_grid_db = {0.0, 12.0};
    CHECK_THROWS_AS(compare(r, other), std::invalid_argument);
}

TEST_CASE("csv files round-trip and are byte-stable") {
    const fs::path dir = scratch_dir();
    const std::string path = (dir / "round.csv").string();
    const std::vector<std::string> header{"snr_db", "a", "b"};
    const std::vector<std::vector<double>> rows{{-2.0, 0.125, 1.0}, {0.0, 0.333333, 0.5}};
    write_csv(path, header, rows);
    const std::string again = (dir / "round2.csv").string();
    write_csv(again, header, rows);
    CHECK(fnv1a_file(path) == fnv1a_file(again));

    std::vector<std::string> got_header;
    const auto got = read_csv(path, &got_header);
    CHECK(got_header == header);
    REQUIRE(got.size() == 2);
    CHECK(got[0][1] == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(got[1][0] == 0.0);

    CHECK_THROWS_AS(write_csv(path, {"bad,name"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(write_csv(path, {"a"}, {{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(read_csv((dir / "missing.csv").string()), IoError);

    const std::string ragged = (dir / "ragged.csv").string();
    std::ofstream(ragged) << "a,b\n1.0\n";
    CHECK_THROWS_AS(read_csv(ragged), FormatError);
    const std::string junk = (dir / "junk.csv").string();
    std::ofstream(junk) << "a\nx17\n";
    CHECK_THROWS_AS(read_csv(junk), FormatError);
}

TEST_CASE("report csv lays out snr rows and class columns") {
    const data::Dataset& ds = oracle_dataset();
    const EvalReport r = evaluate(oracle_for(ds), kClassCount, ds, "oracle");
    const fs::path dir = scratch_dir();
    const std::string path = (dir / "report.csv").string();
    write_report_csv(path, r);

    std::vector<std::string> header;
    const auto rows = read_csv(path, &header);
    REQUIRE(header.size() == 16);
    CHECK(header[0] == "snr_db");
    CHECK(header[1] == "802.15.1-0");
    CHECK(header[15] == "802.11-2");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == -20.0);
    CHECK(rows[2][0] == 20.0);
    for (const auto& row : rows)
        for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i] == 1.0);
}

TEST_CASE("experiment names and configs round-trip") {
    for (const char* name :
         {"accuracy-vs-snr", "cnn-vs-nfsc", "time-vs-freq", "original-vs-reduced"})
        CHECK(experiment_name(experiment_from_name(name)) == name);
    CHECK_THROWS_AS(experiment_from_name("nope"), std::invalid_argument);

    ExperimentConfig cfg;
    cfg.data.per_cell = 9;
    cfg.data.seed = 31;
    cfg.hyper.lr = 0.25;
    cfg.hyper.max_epochs = 3;
    cfg.hyper.seed = 77;
    const ExperimentConfig back = ExperimentConfig::from_config(cfg.to_config());
    CHECK(back.data.per_cell == 9);
    CHECK(back.data.seed == 31);
    CHECK(back.hyper.lr == 0.25);
    CHECK(back.hyper.max_epochs == 3);
    CHECK(back.hyper.seed == 77);

    const ExperimentConfig heavy = default_experiment_config(Experiment::OriginalVsReduced);
    CHECK(heavy.data.per_cell < 40);
    CHECK(heavy.hyper.max_epochs < 200);
}

TEST_CASE("the accuracy sweep experiment reruns byte-identically") {
    ExperimentConfig cfg;
    cfg.data.snr_min_db = cfg.data.snr_max_db = 0.0;
    cfg.data.per_cell = 2;
    cfg.data.seed = 5;
    cfg.hyper.max_epochs = 2;
    cfg.hyper.batch = 8;
    const fs::path dir = scratch_dir();
    cfg.out_dir = (dir / "sweep1").string();
    const auto files1 = run_experiment(Experiment::AccuracyVsSnr, cfg);
    cfg.out_dir = (dir / "sweep2").string();
    const auto files2 = run_experiment(Experiment::AccuracyVsSnr, cfg);

    REQUIRE(files1.size() == files2.size());
    REQUIRE(files1.size() == 5); // csv, train, val, model, meta
    for (const auto& f : files1) CHECK(fs::exists(f));
    for (std::size_t i = 0; i < files1.size(); ++i)
        CHECK(fnv1a_file(files1[i]) == fnv1a_file(files2[i]));

    std::vector<std::string> header;
    const auto rows = read_csv(files1[0], &header);
    REQUIRE(header.size() == 16);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][0] == 0.0);

    const Config meta = Config::load(files1.back());
    CHECK(meta.get("experiment") == "accuracy-vs-snr");
    CHECK(meta.get_u64("epochs_run") == 2);
    CHECK(meta.get("file0") == "accuracy_vs_snr.csv");
    CHECK(meta.get_u64("per_cell") == 2);
    CHECK(meta.get_u64("train_batch") == 8);
}

TEST_CASE("the cnn-vs-nfsc experiment reports both contenders") {
    ExperimentConfig cfg;
    cfg.data.classes = 12;
    cfg.data.snr_min_db = cfg.data.snr_max_db = 20.0;
    cfg.data.per_cell = 2;
    cfg.data.seed = 6;
    cfg.hyper.max_epochs = 1;
    cfg.hyper.batch = 8;
    cfg.out_dir = (scratch_dir() / "duel").string();
    const auto files = run_experiment(Experiment::CnnVsNfsc, cfg);

    std::vector<std::string> header;
    const auto rows = read_csv(files[0], &header);
    CHECK(header == std::vector<std::string>{"snr_db", "cnn_mean", "nfsc_mean"});
    REQUIRE(rows.size() == 1);
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(rows[0][i] >= 0.0);
        CHECK(rows[0][i] <= 1.0);
    }
    const Config meta = Config::load(files.back());
    CHECK(meta.get_u64("subset_classes") == 12);
    CHECK(meta.has("mean_accuracy_gain_pct"));
    CHECK(meta.has("snr_gain_db"));
}

TEST_CASE("the domain experiment trains one model per domain") {
    ExperimentConfig cfg;
    cfg.data.classes = 5;
    cfg.data.snr_min_db = cfg.data.snr_max_db = 0.0;
    cfg.data.per_cell = 2;
    cfg.data.seed = 8;
    cfg.hyper.max_epochs = 1;
    cfg.hyper.batch = 8;
    cfg.out_dir = (scratch_dir() / "domains").string();
    const auto files = run_experiment(Experiment::TimeVsFreq, cfg);
    REQUIRE(files.size() == 8); // csv, 4 datasets, 2 models, meta

    std::vector<std::string> header;
    const auto rows = read_csv(files[0], &header);
    CHECK(header == std::vector<std::string>{"snr_db", "freq_mean", "time_mean"});
    REQUIRE(rows.size() == 1);

    const data::Dataset t = data::load_dataset(files[1]);
    const data::Dataset f = data::load_dataset(files[2]);
    CHECK(t.config.domain == acq::Domain::Time);
    CHECK(f.config.domain == acq::Domain::Frequency);
    const Config meta = Config::load(files.back());
    CHECK(meta.has("freq_minus_time_pct"));
}

TEST_CASE("the model-size experiment runs both topologies") {
    ExperimentConfig cfg;
    cfg.data.classes = 2;
    cfg.data.snr_min_db = cfg.data.snr_max_db = 0.0;
    cfg.data.per_cell = 2;
    cfg.data.seed = 9;
    cfg.hyper.max_epochs = 1;
    cfg.hyper.batch = 4;
    cfg.out_dir = (scratch_dir() / "sizes").string();
    const auto files = run_experiment(Experiment::OriginalVsReduced, cfg);
    REQUIRE(files.size() == 6); // csv, 2 datasets, 2 models, meta

    std::vector<std::string> header;
    read_csv(files[0], &header);
    CHECK(header == std::vector<std::string>{"snr_db", "original_mean", "reduced_mean"});
    const Config meta = Config::load(files.back());
    CHECK(meta.get_u64("original_params") == 16649487);
    CHECK(meta.get_u64("reduced_params") == 128831);
}
