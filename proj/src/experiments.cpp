#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <utility>

#include "wii/channel_map.hpp"
#include "wii/errors.hpp"
#include "wii/eval.hpp"
#include "wii/io.hpp"

namespace wii::eval {

namespace {

namespace fs = std::filesystem;

const char* const kNames[] = {"accuracy-vs-snr", "cnn-vs-nfsc", "time-vs-freq",
                              "original-vs-reduced"};

std::string file_base(Experiment e) {
    std::string base = experiment_name(e);
    for (char& ch : base)
        if (ch == '-') ch = '_';
    return base;
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

data::GenerationConfig validation_config(data::GenerationConfig cfg) {
    cfg.per_cell = std::max<std::size_t>(1, cfg.per_cell / 2);
    return cfg;
}

double grid_mean(const EvalReport& r, const std::vector<std::size_t>& subset = {}) {
    const std::vector<double> curve = r.mean_curve(subset);
    double sum = 0.0;
    for (double v : curve) sum += v;
    return sum / static_cast<double>(curve.size());
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Everything an experiment writes, fingerprinted into the sidecar so a
// rerun can be checked file by file.
struct Artifacts {
    std::string dir;
    std::string base;
    std::string csv;
    std::vector<std::string> files; // datasets and checkpoints, write order

    explicit Artifacts(const ExperimentConfig& cfg, Experiment e)
        : dir(cfg.out_dir), base(file_base(e)), csv(join(dir, base + ".csv")) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("experiment: cannot create output directory " + dir);
    }

    std::string path(const std::string& suffix) const { return join(dir, base + suffix); }

    void save(const data::Dataset& ds, const std::string& suffix) {
        const std::string p = path(suffix);
        data::save_dataset(ds, p);
        files.push_back(p);
    }

    void save(const nn::NetworkParams& params, const nn::NetworkSpec& spec,
              const std::string& suffix) {
        const std::string p = path(suffix);
        nn::save_params(params, spec, p);
        files.push_back(p);
    }

    // Writes the sidecar last and returns all paths, CSV first.
    std::vector<std::string> finish(Experiment e, const ExperimentConfig& cfg, Config meta) {
        meta.set("experiment", experiment_name(e));
        const Config echo = cfg.to_config();
        for (const auto& [k, v] : echo.entries()) meta.set(k, v);
        std::vector<std::string> all{csv};
        all.insert(all.end(), files.begin(), files.end());
        for (std::size_t i = 0; i < all.size(); ++i) {
            meta.set("file" + std::to_string(i), fs::path(all[i]).filename().string());
            meta.set("file" + std::to_string(i) + "_fnv1a", hex64(fnv1a_file(all[i])));
        }
        const std::string meta_path = path(".meta");
        meta.save(meta_path);
        all.push_back(meta_path);
        return all;
    }
};

void record_training(Config& meta, const std::string& prefix, const nn::TrainResult& r) {
    meta.set_u64(prefix + "epochs_run", r.history.size());
    if (!r.history.empty()) {
        meta.set_f64(prefix + "train_loss", r.history.back().loss);
        meta.set_f64(prefix + "train_accuracy", r.history.back().accuracy);
    }
}

void record_comparison(Config& meta, const ComparisonMetrics& m) {
    meta.set_f64("mean_accuracy_gain_pct", m.mean_accuracy_gain_pct);
    meta.set_f64("snr_gain_db", m.snr_gain_db);
    meta.set_u64("snr_gain_defined", m.snr_gain_defined ? 1 : 0);
    meta.set_i64("excluded_levels", m.excluded_levels);
}

std::vector<double> snr_column(const EvalReport& r) { return r.snr_grid_db; }

std::vector<std::vector<double>> curve_rows(const EvalReport& grid_source,
                                            const std::vector<std::vector<double>>& curves) {
    const std::vector<double> snr = snr_column(grid_source);
    std::vector<std::vector<double>> rows;
    for (std::size_t s = 0; s < snr.size(); ++s) {
        std::vector<double> row{snr[s]};
        for (const auto& c : curves) row.push_back(c[s]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::size_t> non_wifi_subset(const EvalReport& r) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < r.classes.size(); ++i)
        if (r.classes[i].technology != Technology::Ieee802_11) subset.push_back(i);
    return subset;
}

std::vector<std::string> run_accuracy_vs_snr(const ExperimentConfig& cfg) {
    Artifacts art(cfg, Experiment::AccuracyVsSnr);
    const data::Dataset train_ds = data::generate_dataset(cfg.data, data::Split::Train);
    const data::Dataset val_ds =
        data::generate_dataset(validation_config(cfg.data), data::Split::Validation);
    art.save(train_ds, "_train.wiids");
    art.save(val_ds, "_val.wiids");

    const nn::NetworkSpec spec = nn::reduced_spec();
    const nn::TrainResult r = nn::train(spec, train_ds, cfg.hyper);
    art.save(r.params, spec, "_model.wiinn");

    const EvalReport report = evaluate(spec, r.params, val_ds);
    write_report_csv(art.csv, report);

    Config meta;
    meta.set("model", spec.id);
    record_training(meta, "", r);
    meta.set_f64("val_mean_accuracy", grid_mean(report));
    return art.finish(Experiment::AccuracyVsSnr, cfg, std::move(meta));
}

std::vector<std::string> run_cnn_vs_nfsc(const ExperimentConfig& cfg) {
    Artifacts art(cfg, Experiment::CnnVsNfsc);
    const data::Dataset train_ds = data::generate_dataset(cfg.data, data::Split::Train);
    const data::Dataset val_ds =
        data::generate_dataset(validation_config(cfg.data), data::Split::Validation);
    art.save(train_ds, "_train.wiids");
    art.save(val_ds, "_val.wiids");

    const nn::NetworkSpec spec = nn::reduced_spec();
    const nn::TrainResult r = nn::train(spec, train_ds, cfg.hyper);
    art.save(r.params, spec, "_model.wiinn");

    const EvalReport cnn = evaluate(spec, r.params, val_ds);
    const auto defs = nfsc::default_class_defs(cfg.data.n_cnn, /*include_wifi=*/false);
    const EvalReport fuzzy = evaluate(defs, val_ds);

    // The spread-spectrum 802.11 classes are left out of the comparison;
    // the NFSC runs without templates for them.
    const std::vector<std::size_t> subset = non_wifi_subset(cnn);
    write_csv(art.csv, {"snr_db", "cnn_mean", "nfsc_mean"},
              curve_rows(cnn, {cnn.mean_curve(subset), fuzzy.mean_curve(subset)}));

    Config meta;
    meta.set("model", spec.id);
    record_training(meta, "", r);
    meta.set_u64("subset_classes", subset.size());
    meta.set_f64("cnn_mean_accuracy", grid_mean(cnn, subset));
    meta.set_f64("nfsc_mean_accuracy", grid_mean(fuzzy, subset));
    record_comparison(meta, compare(cnn, fuzzy, subset));
    return art.finish(Experiment::CnnVsNfsc, cfg, std::move(meta));
}

std::vector<std::string> run_time_vs_freq(const ExperimentConfig& cfg) {
    Artifacts art(cfg, Experiment::TimeVsFreq);
    const auto [train_t, train_f] = data::generate_dataset_pair(cfg.data, data::Split::Train);
    const auto [val_t, val_f] =
        data::generate_dataset_pair(validation_config(cfg.data), data::Split::Validation);
    art.save(train_t, "_train_time.wiids");
    art.save(train_f, "_train_freq.wiids");
    art.save(val_t, "_val_time.wiids");
    art.save(val_f, "_val_freq.wiids");

    const nn::NetworkSpec spec = nn::reduced_spec();
    const nn::TrainResult rf = nn::train(spec, train_f, cfg.hyper);
    const nn::TrainResult rt = nn::train(spec, train_t, cfg.hyper);
    art.save(rf.params, spec, "_model_freq.wiinn");
    art.save(rt.params, spec, "_model_time.wiinn");

    const EvalReport rep_f = evaluate(spec, rf.params, val_f);
    const EvalReport rep_t = evaluate(spec, rt.params, val_t);
    write_csv(art.csv, {"snr_db", "freq_mean", "time_mean"},
              curve_rows(rep_f, {rep_f.mean_curve(), rep_t.mean_curve()}));

    Config meta;
    meta.set("model", spec.id);
    record_training(meta, "freq_", rf);
    record_training(meta, "time_", rt);
    const double mf = grid_mean(rep_f);
    const double mt = grid_mean(rep_t);
    meta.set_f64("freq_mean_accuracy", mf);
    meta.set_f64("time_mean_accuracy", mt);
    meta.set_f64("freq_minus_time_pct", 100.0 * (mf - mt));
    return art.finish(Experiment::TimeVsFreq, cfg, std::move(meta));
}

std::vector<std::string> run_original_vs_reduced(const ExperimentConfig& cfg) {
    Artifacts art(cfg, Experiment::OriginalVsReduced);
    const data::Dataset train_ds = data::generate_dataset(cfg.data, data::Split::Train);
    const data::Dataset val_ds =
        data::generate_dataset(validation_config(cfg.data), data::Split::Validation);
    art.save(train_ds, "_train.wiids");
    art.save(val_ds, "_val.wiids");

    const nn::NetworkSpec original = nn::original_spec();
    const nn::NetworkSpec reduced = nn::reduced_spec();
    const nn::TrainResult ro = nn::train(original, train_ds, cfg.hyper);
    const nn::TrainResult rr = nn::train(reduced, train_ds, cfg.hyper);
    art.save(ro.params, original, "_model_original.wiinn");
    art.save(rr.params, reduced, "_model_reduced.wiinn");

    const EvalReport rep_o = evaluate(original, ro.params, val_ds);
    const EvalReport rep_r = evaluate(reduced, rr.params, val_ds);
    write_csv(art.csv, {"snr_db", "original_mean", "reduced_mean"},
              curve_rows(rep_o, {rep_o.mean_curve(), rep_r.mean_curve()}));

    Config meta;
    record_training(meta, "original_", ro);
    record_training(meta, "reduced_", rr);
    meta.set_u64("original_params", nn::param_count(original));
    meta.set_u64("reduced_params", nn::param_count(reduced));
    meta.set_f64("original_mean_accuracy", grid_mean(rep_o));
    meta.set_f64("reduced_mean_accuracy", grid_mean(rep_r));
    return art.finish(Experiment::OriginalVsReduced, cfg, std::move(meta));
}

} // namespace

std::string experiment_name(Experiment e) {
    const auto i = static_cast<std::size_t>(e);
    if (i >= std::size(kNames)) throw std::invalid_argument("experiment_name: bad experiment value");
    return kNames[i];
}

Experiment experiment_from_name(const std::string& name) {
    for (std::size_t i = 0; i < std::size(kNames); ++i)
        if (name == kNames[i]) return static_cast<Experiment>(i);
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

ExperimentConfig ExperimentConfig::from_config(const Config& c) {
    ExperimentConfig e;
    e.data = data::GenerationConfig::from_config(c);
    e.hyper.lr = c.get_f64_or("train_lr", e.hyper.lr);
    e.hyper.max_epochs = c.get_u64_or("train_max_epochs", e.hyper.max_epochs);
    e.hyper.batch = c.get_u64_or("train_batch", e.hyper.batch);
    e.hyper.seed = c.get_u64_or("train_seed", e.hyper.seed);
    e.hyper.patience = c.get_u64_or("train_patience", e.hyper.patience);
    e.hyper.min_rel_improve = c.get_f64_or("train_min_rel_improve", e.hyper.min_rel_improve);
    return e;
}

Config ExperimentConfig::to_config() const {
    Config c = data.to_config();
    c.set_f64("train_lr", hyper.lr);
    c.set_u64("train_max_epochs", hyper.max_epochs);
    c.set_u64("train_batch", hyper.batch);
    c.set_u64("train_seed", hyper.seed);
    c.set_u64("train_patience", hyper.patience);
    c.set_f64("train_min_rel_improve", hyper.min_rel_improve);
    return c;
}

ExperimentConfig default_experiment_config(Experiment e) {
    ExperimentConfig cfg;
    if (e == Experiment::OriginalVsReduced) {
        // The full-size network costs around two orders of magnitude more
        // per example, so this comparison defaults to a small run.
        cfg.data.per_cell = 2;
        cfg.hyper.max_epochs = 4;
        cfg.hyper.batch = 128;
    }
    return cfg;
}

std::vector<std::string> run_experiment(Experiment e, const ExperimentConfig& cfg) {
    cfg.data.validate();
    switch (e) {
        case Experiment::AccuracyVsSnr: return run_accuracy_vs_snr(cfg);
        case Experiment::CnnVsNfsc: return run_cnn_vs_nfsc(cfg);
        case Experiment::TimeVsFreq: return run_time_vs_freq(cfg);
        case Experiment::OriginalVsReduced: return run_original_vs_reduced(cfg);
    }
    throw std::invalid_argument("run_experiment: bad experiment value");
}

} // namespace wii::eval
