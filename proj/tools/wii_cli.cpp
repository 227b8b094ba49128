// Command-line front end: dataset generation, training, evaluation,
// report comparison and the canned experiments.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wii/channel_map.hpp"
#include "wii/dataset.hpp"
#include "wii/eval.hpp"
#include "wii/nfsc.hpp"
#include "wii/nn.hpp"

namespace {

using namespace wii;

data::Split split_from_name(const std::string& name) {
    if (name == "train") return data::Split::Train;
    if (name == "validation" || name == "val") return data::Split::Validation;
    throw CLI::ValidationError("--split", "must be 'train' or 'validation'");
}

acq::Domain domain_from_name(const std::string& name) {
    if (name == "time") return acq::Domain::Time;
    if (name == "frequency" || name == "freq") return acq::Domain::Frequency;
    throw CLI::ValidationError("--domain", "must be 'time' or 'frequency'");
}

// Dataset flags mirror the config keys (classes, snr_min, snr_max,
// snr_step, per_cell, domain, n_cnn, seed).
struct DataFlags {
    data::GenerationConfig cfg;
    std::string domain = "frequency";

    void attach(CLI::App& app, bool seed_required) {
        app.add_option("--classes", cfg.classes, "Leading class count (1-15)")
            ->capture_default_str();
        app.add_option("--snr-min", cfg.snr_min_db, "Lowest grid SNR in dB")
            ->capture_default_str();
        app.add_option("--snr-max", cfg.snr_max_db, "Highest grid SNR in dB")
            ->capture_default_str();
        app.add_option("--snr-step", cfg.snr_step_db, "Grid step in dB")->capture_default_str();
        app.add_option("--per-cell", cfg.per_cell, "Examples per (class, SNR) cell")
            ->capture_default_str();
        app.add_option("--domain", domain, "Snapshot domain: time or frequency")
            ->capture_default_str();
        app.add_option("--n-cnn", cfg.n_cnn, "Sensing window index")->capture_default_str();
        auto* seed = app.add_option("--seed", cfg.seed, "Dataset master seed");
        if (seed_required)
            seed->required();
        else
            seed->capture_default_str();
    }

    data::GenerationConfig resolve() const {
        data::GenerationConfig out = cfg;
        out.domain = domain_from_name(domain);
        out.validate();
        return out;
    }
};

// Training flags mirror the hyperparameter keys (lr, batch, max_epochs,
// patience, min_rel_improve, seed).
struct TrainFlags {
    nn::TrainHyper hyper;

    void attach(CLI::App& app, const std::string& prefix, bool seed_required) {
        app.add_option("--" + prefix + "lr", hyper.lr, "Adam learning rate")
            ->capture_default_str();
        app.add_option("--" + prefix + "batch", hyper.batch, "Mini-batch size")
            ->capture_default_str();
        app.add_option("--" + prefix + "max-epochs", hyper.max_epochs, "Epoch budget")
            ->capture_default_str();
        app.add_option("--" + prefix + "patience", hyper.patience,
                       "Epochs without improvement before stopping")
            ->capture_default_str();
        app.add_option("--" + prefix + "min-rel-improve", hyper.min_rel_improve,
                       "Relative loss improvement that resets patience")
            ->capture_default_str();
        auto* seed = app.add_option("--" + prefix + "seed", hyper.seed, "Training seed");
        if (seed_required)
            seed->required();
        else
            seed->capture_default_str();
    }
};

void print_history(const nn::TrainResult& r) {
    for (std::size_t i = 0; i < r.history.size(); ++i)
        std::printf("epoch %3zu  loss %.6f  accuracy %.4f\n", i + 1, r.history[i].loss,
                    r.history[i].accuracy);
}

void print_report_summary(const eval::EvalReport& report) {
    const std::vector<double> curve = report.mean_curve();
    double overall = 0.0;
    for (std::size_t s = 0; s < curve.size(); ++s) {
        std::printf("snr %+6.1f dB  mean accuracy %.4f\n", report.snr_grid_db[s], curve[s]);
        overall += curve[s];
    }
    std::printf("overall mean accuracy %.4f\n", overall / static_cast<double>(curve.size()));
}

int cmd_generate(const DataFlags& flags, const std::string& split, const std::string& out) {
    const data::GenerationConfig cfg = flags.resolve();
    const data::Dataset ds = data::generate_dataset(cfg, split_from_name(split));
    data::save_dataset(ds, out);
    std::printf("wrote %s: %zu examples, %zu classes, %zu SNR points\n", out.c_str(),
                ds.examples.size(), cfg.classes, cfg.snr_grid().size());
    return 0;
}

int cmd_train(const TrainFlags& flags, const std::string& spec_id, const std::string& data_path,
              const std::string& val_path, const std::string& out) {
    const nn::NetworkSpec spec = nn::spec_for_id(spec_id);
    std::printf("loading %s\n", data_path.c_str());
    const data::Dataset train_ds = data::load_dataset(data_path);
    std::printf("training %s on %zu examples\n", spec.id.c_str(), train_ds.examples.size());
    const nn::TrainResult r = nn::train(spec, train_ds, flags.hyper);
    print_history(r);
    nn::save_params(r.params, spec, out);
    std::printf("wrote %s\n", out.c_str());
    if (!val_path.empty()) {
        const data::Dataset val_ds = data::load_dataset(val_path);
        print_report_summary(eval::evaluate(spec, r.params, val_ds));
    }
    return 0;
}

int cmd_eval(const std::string& model_path, bool use_nfsc, const std::string& defs_path,
             const std::string& data_path, const std::string& out, const std::string& meta) {
    const data::Dataset ds = data::load_dataset(data_path);
    eval::EvalReport report;
    if (use_nfsc) {
        std::vector<nfsc::NfscClassDef> defs =
            defs_path.empty() ? nfsc::default_class_defs(ds.config.n_cnn)
                              : nfsc::defs_from_config(Config::load(defs_path));
        report = eval::evaluate(defs, ds);
    } else {
        const auto [spec, params] = nn::load_checkpoint(model_path);
        report = eval::evaluate(spec, params, ds);
    }
    eval::write_report_csv(out, report);
    std::printf("wrote %s\n", out.c_str());
    if (!meta.empty()) {
        report.metadata.save(meta);
        std::printf("wrote %s\n", meta.c_str());
    }
    print_report_summary(report);
    return 0;
}

std::vector<double> column_mean(const std::vector<std::vector<double>>& rows,
                                const std::vector<std::size_t>& cols) {
    std::vector<double> curve;
    for (const auto& row : rows) {
        double sum = 0.0;
        for (std::size_t c : cols) {
            if (c + 1 >= row.size())
                throw std::invalid_argument("compare: class column out of range");
            sum += row[c + 1];
        }
        curve.push_back(sum / static_cast<double>(cols.size()));
    }
    return curve;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                std::vector<std::size_t> classes) {
    std::vector<std::string> header_a, header_b;
    const auto rows_a = eval::read_csv(a_path, &header_a);
    const auto rows_b = eval::read_csv(b_path, &header_b);
    if (rows_a.empty() || rows_b.empty())
        throw std::invalid_argument("compare: reports have no rows");
    if (rows_a.size() != rows_b.size())
        throw std::invalid_argument("compare: reports cover different SNR grids");

    std::vector<double> snr;
    for (std::size_t i = 0; i < rows_a.size(); ++i) {
        if (rows_a[i][0] != rows_b[i][0])
            throw std::invalid_argument("compare: reports cover different SNR grids");
        snr.push_back(rows_a[i][0]);
    }
    if (classes.empty())
        for (std::size_t c = 0; c + 1 < header_a.size(); ++c) classes.push_back(c);

    const eval::ComparisonMetrics m =
        eval::compare_curves(snr, column_mean(rows_a, classes), column_mean(rows_b, classes));
    std::printf("mean_accuracy_gain_pct = %.4f\n", m.mean_accuracy_gain_pct);
    if (m.snr_gain_defined)
        std::printf("snr_gain_db = %.4f\n", m.snr_gain_db);
    else
        std::printf("snr_gain_db = undefined\n");
    std::printf("excluded_levels = %d\n", m.excluded_levels);
    return 0;
}

int cmd_experiment(const std::string& name, const std::string& out_dir, CLI::App* sub,
                   const DataFlags& data_flags, const TrainFlags& train_flags) {
    const eval::Experiment which = eval::experiment_from_name(name);
    eval::ExperimentConfig cfg = eval::default_experiment_config(which);
    cfg.out_dir = out_dir;

    // Only flags the user actually passed override the per-experiment
    // defaults.
    const auto given = [sub](const std::string& flag) { return sub->count(flag) > 0; };
    if (given("--classes")) cfg.data.classes = data_flags.cfg.classes;
    if (given("--snr-min")) cfg.data.snr_min_db = data_flags.cfg.snr_min_db;
    if (given("--snr-max")) cfg.data.snr_max_db = data_flags.cfg.snr_max_db;
    if (given("--snr-step")) cfg.data.snr_step_db = data_flags.cfg.snr_step_db;
    if (given("--per-cell")) cfg.data.per_cell = data_flags.cfg.per_cell;
    if (given("--domain")) cfg.data.domain = domain_from_name(data_flags.domain);
    if (given("--n-cnn")) cfg.data.n_cnn = data_flags.cfg.n_cnn;
    if (given("--seed")) cfg.data.seed = data_flags.cfg.seed;
    if (given("--train-lr")) cfg.hyper.lr = train_flags.hyper.lr;
    if (given("--train-batch")) cfg.hyper.batch = train_flags.hyper.batch;
    if (given("--train-max-epochs")) cfg.hyper.max_epochs = train_flags.hyper.max_epochs;
    if (given("--train-patience")) cfg.hyper.patience = train_flags.hyper.patience;
    if (given("--train-min-rel-improve"))
        cfg.hyper.min_rel_improve = train_flags.hyper.min_rel_improve;
    if (given("--train-seed")) cfg.hyper.seed = train_flags.hyper.seed;

    std::printf("running %s into %s\n", name.c_str(), out_dir.c_str());
    std::fflush(stdout);
    const std::vector<std::string> files = eval::run_experiment(which, cfg);
    for (const std::string& f : files) std::printf("wrote %s\n", f.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2.4 GHz interference identification toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Synthesize a labelled snapshot dataset");
    DataFlags gen_data;
    gen_data.attach(*gen, /*seed_required=*/true);
    std::string gen_split = "train";
    std::string gen_out;
    gen->add_option("--split", gen_split, "Dataset split: train or validation")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "Output dataset path")->required();

    // train
    auto* tr = app.add_subcommand("train", "Train a classifier on a dataset");
    TrainFlags tr_flags;
    tr_flags.attach(*tr, "", /*seed_required=*/true);
    std::string tr_spec = "cnn-reduced";
    std::string tr_data, tr_val, tr_out;
    tr->add_option("--spec", tr_spec, "Topology id: cnn-reduced or cnn-original")
        ->capture_default_str();
    tr->add_option("--data", tr_data, "Training dataset path")->required();
    tr->add_option("--val", tr_val, "Optional validation dataset to score after training");
    tr->add_option("--out", tr_out, "Output checkpoint path")->required();

    // eval
    auto* ev = app.add_subcommand("eval", "Evaluate a model on a dataset");
    std::string ev_model, ev_defs, ev_data, ev_out, ev_meta;
    bool ev_nfsc = false;
    ev->add_option("--model", ev_model, "Checkpoint path");
    ev->add_flag("--nfsc", ev_nfsc, "Evaluate the fuzzy template classifier instead");
    ev->add_option("--defs", ev_defs, "Class definition config for --nfsc");
    ev->add_option("--data", ev_data, "Dataset path")->required();
    ev->add_option("--out", ev_out, "Report CSV path")->required();
    ev->add_option("--meta", ev_meta, "Optional metadata sidecar path");

    // compare
    auto* cm = app.add_subcommand("compare", "Compare two report CSVs");
    std::string cm_a, cm_b;
    std::vector<std::size_t> cm_classes;
    cm->add_option("--a", cm_a, "First report CSV")->required();
    cm->add_option("--b", cm_b, "Second report CSV")->required();
    cm->add_option("--classes", cm_classes, "Class column indices to average (default all)");

    // experiment
    auto* ex = app.add_subcommand("experiment", "Run one of the canned comparisons");
    DataFlags ex_data;
    ex_data.attach(*ex, /*seed_required=*/false);
    TrainFlags ex_train;
    ex_train.attach(*ex, "train-", /*seed_required=*/false);
    std::string ex_name, ex_dir = ".";
    ex->add_option("--name", ex_name,
                   "accuracy-vs-snr | cnn-vs-nfsc | time-vs-freq | original-vs-reduced")
        ->required();
    ex->add_option("--out-dir", ex_dir, "Output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_data, gen_split, gen_out);
        if (tr->parsed()) return cmd_train(tr_flags, tr_spec, tr_data, tr_val, tr_out);
        if (ev->parsed()) {
            if (!ev_nfsc && ev_model.empty())
                throw std::invalid_argument("eval: pass --model PATH or --nfsc");
            if (ev_nfsc && !ev_model.empty())
                throw std::invalid_argument("eval: --model and --nfsc are mutually exclusive");
            return cmd_eval(ev_model, ev_nfsc, ev_defs, ev_data, ev_out, ev_meta);
        }
        if (cm->parsed()) return cmd_compare(cm_a, cm_b, cm_classes);
        if (ex->parsed()) return cmd_experiment(ex_name, ex_dir, ex, ex_data, ex_train);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
