#include "wii/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wii/channel_map.hpp"
#include "wii/errors.hpp"
#include "wii/io.hpp"

namespace wii::eval {

namespace {

std::vector<ClassLabel> full_class_set(int n_cnn) { return class_set(ChannelMap{n_cnn}); }

int label_position(const std::vector<ClassLabel>& set, const ClassLabel& label) {
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i] == label) return static_cast<int>(i);
    return -1;
}

} // namespace

Classifier cnn_classifier(const nn::NetworkSpec& spec, const nn::NetworkParams& params) {
    return [spec, params](const acq::InputMatrix& m, acq::Domain) {
        const nn::Tensor out = nn::forward(spec, params, m, nn::Mode::Infer);
        const auto it = std::max_element(out.data.begin(), out.data.end());
        return static_cast<int>(it - out.data.begin());
    };
}

Classifier nfsc_classifier(std::vector<nfsc::NfscClassDef> defs) {
    return [defs = std::move(defs)](const acq::InputMatrix& m, acq::Domain domain) {
        const nfsc::NfscDecision d = nfsc::classify(m, domain, defs);
        if (d.no_class()) return -1;
        return class_index(defs[static_cast<std::size_t>(d.decided)].label);
    };
}

double EvalReport::snr_mean(std::size_t snr_index, const std::vector<std::size_t>& subset) const {
    if (snr_index >= snr_grid_db.size()) throw std::invalid_argument("snr_mean: snr index out of range");
    double sum = 0.0;
    std::size_t n = 0;
    if (subset.empty()) {
        for (const auto& row : accuracy) sum += row[snr_index], ++n;
    } else {
        for (std::size_t c : subset) {
            if (c >= accuracy.size()) throw std::invalid_argument("snr_mean: class index out of range");
            sum += accuracy[c][snr_index];
            ++n;
        }
    }
    if (n == 0) throw std::invalid_argument("snr_mean: empty class set");
    return sum / static_cast<double>(n);
}

std::vector<double> EvalReport::mean_curve(const std::vector<std::size_t>& subset) const {
    std::vector<double> curve(snr_grid_db.size());
    for (std::size_t s = 0; s < curve.size(); ++s) curve[s] = snr_mean(s, subset);
    return curve;
}

EvalReport evaluate(const Classifier& model, std::size_t n_outputs, const data::Dataset& ds,
                    const std::string& model_id) {
    if (!model) throw std::invalid_argument("evaluate: null model");
    if (n_outputs == 0) throw std::invalid_argument("evaluate: model has no outputs");
    if (ds.examples.empty()) throw std::invalid_argument("evaluate: empty dataset");
    ds.config.validate();

    EvalReport r;
    r.snr_grid_db = ds.config.snr_grid();
    const std::vector<ClassLabel> full = full_class_set(ds.config.n_cnn);
    r.classes.assign(full.begin(), full.begin() + static_cast<long>(ds.config.classes));
    const std::size_t n_classes = r.classes.size();
    const std::size_t n_snr = r.snr_grid_db.size();
    r.accuracy.assign(n_classes, std::vector<double>(n_snr, 0.0));
    r.counts.assign(n_classes, std::vector<std::uint64_t>(n_snr, 0));
    r.confusion.assign(n_classes, std::vector<std::uint64_t>(n_outputs + 1, 0));
    std::vector<std::vector<std::uint64_t>> correct(n_classes, std::vector<std::uint64_t>(n_snr, 0));

    std::uint64_t no_class = 0;
    for (const data::Example& ex : ds.examples) {
        const int ci = label_position(full, ex.label);
        if (ci < 0 || static_cast<std::size_t>(ci) >= n_classes ||
            static_cast<std::size_t>(ci) >= n_outputs)
            throw std::invalid_argument("evaluate: example label outside the model's class set");
        const double snr = ex.snr_centi_db / 100.0;
        const double step = ds.config.snr_step_db;
        const auto si = static_cast<std::size_t>(std::llround((snr - r.snr_grid_db[0]) / step));
        if (si >= n_snr || std::abs(r.snr_grid_db[si] - snr) > 1e-9)
            throw std::invalid_argument("evaluate: example SNR off the dataset grid");

        const int pred = model(ex.matrix, ds.config.domain);
        if (pred < -1 || pred >= static_cast<int>(n_outputs))
            throw std::invalid_argument("evaluate: model prediction out of range");

        const auto c = static_cast<std::size_t>(ci);
        r.counts[c][si] += 1;
        r.confusion[c][pred < 0 ? n_outputs : static_cast<std::size_t>(pred)] += 1;
        if (pred == ci) correct[c][si] += 1;
        if (pred < 0) ++no_class;
    }

    for (std::size_t c = 0; c < n_classes; ++c)
        for (std::size_t s = 0; s < n_snr; ++s)
            if (r.counts[c][s] > 0)
                r.accuracy[c][s] =
                    static_cast<double>(correct[c][s]) / static_cast<double>(r.counts[c][s]);

    r.metadata.set("model", model_id);
    r.metadata.set("split", data::split_name(ds.split));
    r.metadata.set_u64("examples", ds.examples.size());
    r.metadata.set_u64("no_class", no_class);
    r.metadata.set("no_class_policy", "counts-as-error");
    const Config data_cfg = ds.config.to_config();
    for (const auto& [k, v] : data_cfg.entries()) r.metadata.set("data_" + k, v);
    return r;
}

EvalReport evaluate(const nn::NetworkSpec& spec, const nn::NetworkParams& params,
                    const data::Dataset& ds) {
    return evaluate(cnn_classifier(spec, params), spec.output_size(), ds, spec.id);
}

EvalReport evaluate(const std::vector<nfsc::NfscClassDef>& defs, const data::Dataset& ds) {
    if (defs.empty()) throw std::invalid_argument("evaluate: no class definitions");
    EvalReport r = evaluate(nfsc_classifier(defs), static_cast<std::size_t>(kClassCount), ds, "nfsc");
    r.metadata.set_u64("nfsc_defs", defs.size());
    return r;
}

std::vector<double> snr_gain_levels() {
    std::vector<double> levels;
    for (int k = 4; k <= 18; ++k) levels.push_back(k * 0.05);
    return levels;
}

namespace {

// Piecewise-linear inversion: the SNR where the curve crosses `level`,
// defined only when exactly one segment crosses and it is rising there.
bool invert_curve(const std::vector<double>& snr, const std::vector<double>& curve, double level,
                  double* out) {
    int crossings = 0;
    double where = 0.0;
    bool rising = false;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const double c0 = curve[i];
        const double c1 = curve[i + 1];
        const bool up = c0 <= level && c1 > level;
        const bool down = c0 >= level && c1 < level;
        if (!up && !down) continue;
        ++crossings;
        rising = up;
        const double t = c1 == c0 ? 0.0 : (level - c0) / (c1 - c0);
        where = snr[i] + t * (snr[i + 1] - snr[i]);
    }
    if (crossings != 1 || !rising) return false;
    *out = where;
    return true;
}

} // namespace

ComparisonMetrics compare_curves(const std::vector<double>& snr_db,
                                 const std::vector<double>& mean_a,
                                 const std::vector<double>& mean_b) {
    if (snr_db.empty()) throw std::invalid_argument("compare_curves: empty SNR grid");
    if (mean_a.size() != snr_db.size() || mean_b.size() != snr_db.size())
        throw std::invalid_argument("compare_curves: curve length does not match the SNR grid");

    ComparisonMetrics m;
    double gain = 0.0;
    for (std::size_t i = 0; i < snr_db.size(); ++i) gain += mean_a[i] - mean_b[i];
    m.mean_accuracy_gain_pct = 100.0 * gain / static_cast<double>(snr_db.size());

    if (mean_a == mean_b) {
        // Identical curves compare as exactly zero even where inversion
        // would be undefined.
        m.snr_gain_db = 0.0;
        m.snr_gain_defined = true;
        return m;
    }

    double sum = 0.0;
    int used = 0;
    for (double level : snr_gain_levels()) {
        double sa = 0.0, sb = 0.0;
        if (invert_curve(snr_db, mean_a, level, &sa) && invert_curve(snr_db, mean_b, level, &sb)) {
            sum += sb - sa;
            ++used;
        } else {
            ++m.excluded_levels;
        }
    }
    if (used > 0) {
        m.snr_gain_db = sum / used;
        m.snr_gain_defined = true;
    } else {
        m.snr_gain_db = std::numeric_limits<double>::quiet_NaN();
        m.snr_gain_defined = false;
    }
    return m;
}

ComparisonMetrics compare(const EvalReport& a, const EvalReport& b,
                          const std::vector<std::size_t>& class_subset) {
    if (a.snr_grid_db != b.snr_grid_db)
        throw std::invalid_argument("compare: reports use different SNR grids");
    if (!(a.classes == b.classes))
        throw std::invalid_argument("compare: reports use different class sets");
    return compare_curves(a.snr_grid_db, a.mean_curve(class_subset), b.mean_curve(class_subset));
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    if (header.empty()) throw std::invalid_argument("write_csv: empty header");
    for (const auto& h : header)
        if (h.empty() || h.find_first_of(",\n\r") != std::string::npos)
            throw std::invalid_argument("write_csv: bad column name '" + h + "'");
    std::ofstream out = open_output(path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out.put(',');
        out << header[i];
    }
    out.put('\n');
    char buf[64];
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("write_csv: row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.put(',');
            std::snprintf(buf, sizeof buf, "%.6f", row[i]);
            out << buf;
        }
        out.put('\n');
    }
    if (!out) throw IoError("write_csv: failed writing " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::vector<std::vector<double>> read_csv(const std::string& path, std::vector<std::string>* header) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("read_csv: " + path + " has no header");
    const std::vector<std::string> cols = split_fields(line);
    if (header) *header = cols;

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != cols.size())
            throw FormatError("read_csv: ragged row in " + path);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& f : fields) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(f, &used);
            } catch (const std::exception&) {
                throw FormatError("read_csv: bad number '" + f + "' in " + path);
            }
            if (used != f.size()) throw FormatError("read_csv: bad number '" + f + "' in " + path);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_report_csv(const std::string& path, const EvalReport& report) {
    std::vector<std::string> header{"snr_db"};
    for (const ClassLabel& c : report.classes) header.push_back(class_name(c));
    std::vector<std::vector<double>> rows;
    for (std::size_t s = 0; s < report.snr_grid_db.size(); ++s) {
        std::vector<double> row{report.snr_grid_db[s]};
        for (std::size_t c = 0; c < report.classes.size(); ++c) row.push_back(report.accuracy[c][s]);
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

} // namespace wii::eval
