#include "wii/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include "wii/errors.hpp"
#include "wii/io.hpp"
#include "wii/rng.hpp"
#include "wii/waveforms.hpp"

namespace wii::data {

namespace {

constexpr char kMagic[6] = {'W', 'I', 'I', 'D', 'S', '1'};
constexpr std::uint16_t kVersion = 1;

std::uint64_t split_stream(Split s) { return s == Split::Train ? 1 : 2; }

acq::Domain domain_from_name(const std::string& name) {
    if (name == "time") return acq::Domain::Time;
    if (name == "frequency") return acq::Domain::Frequency;
    throw std::invalid_argument("dataset config: domain must be 'time' or 'frequency'");
}

const char* domain_name(acq::Domain d) {
    return d == acq::Domain::Time ? "time" : "frequency";
}

std::int16_t to_centi_db(double snr_db) {
    const double c = std::round(snr_db * 100.0);
    if (c < -32768.0 || c > 32767.0)
        throw std::invalid_argument("dataset: snr out of centi-dB range");
    return static_cast<std::int16_t>(c);
}

// Range of output sample indices that may start a 128-sample window while
// staying entirely inside the packet body (every contributing input sample
// past the edge ramps).
struct StartRange {
    std::size_t first;
    std::size_t count;
};

StartRange body_start_range(std::size_t in_len, double in_rate, const acq::ChannelizePlan& plan,
                            std::size_t out_len) {
    const std::size_t ramp = wave::ramp_samples(in_rate);
    const std::size_t m_min = (ramp + plan.decim - 1) / plan.decim;
    // Output m covers inputs [m*decim, m*decim + taps).
    if (in_len < ramp + plan.n_taps) throw std::invalid_argument("dataset: packet too short");
    std::size_t m_max = (in_len - ramp - plan.n_taps) / plan.decim;
    m_max = std::min(m_max, out_len - 1);
    if (m_max < m_min + acq::kSnapshotLength - 1)
        throw std::invalid_argument("dataset: packet body shorter than a snapshot");
    return {m_min, m_max - m_min - (acq::kSnapshotLength - 1) + 1};
}

// Normalize, then quantize to file precision so in-memory and reloaded
// datasets agree bit for bit.
acq::InputMatrix to_stored_matrix(const acq::Snapshot& snap) {
    acq::InputMatrix m = acq::normalize_input(acq::to_input_matrix(snap));
    for (double& v : m.v) v = static_cast<double>(static_cast<float>(v));
    return m;
}

// The full per-example pipeline.  Produces the snapshot in both domains
// from one synthesis pass; the random draws do not depend on which domain
// the caller keeps.
void make_example_pair(const ClassLabel& label, double snr_db, const ChannelMap& map, Rng& rng,
                       Example& time_ex, Example& freq_ex) {
    const auto variants = wave::variants_for(label.technology);
    const auto& variant = *variants[rng.below(variants.size())];
    const auto payload = wave::random_payload(variant, rng);
    const IqStream packet = wave::synth_packet(variant, payload, rng);

    // Tune so the emitter appears at its physical offset from the sensing
    // center.
    const double offset = class_offset_hz(label, map);
    const IqStream channelized = acq::channelize(packet, -offset);
    const IqStream noisy = acq::add_awgn(channelized, snr_db, rng);

    const auto plan = acq::plan_channelize(packet.sample_rate_hz, acq::kSensingRateHz);
    const StartRange range =
        body_start_range(packet.samples.size(), packet.sample_rate_hz, plan, noisy.samples.size());
    const std::size_t start = range.first + rng.below(range.count);

    const acq::Snapshot snap = acq::extract_snapshot(noisy, start, label, snr_db);
    time_ex.label = freq_ex.label = label;
    time_ex.snr_centi_db = freq_ex.snr_centi_db = to_centi_db(snr_db);
    time_ex.matrix = to_stored_matrix(snap);
    freq_ex.matrix = to_stored_matrix(acq::to_frequency_domain(snap));
}

} // namespace

const char* split_name(Split s) { return s == Split::Train ? "train" : "validation"; }

GenerationConfig GenerationConfig::from_config(const Config& c) {
    GenerationConfig g;
    g.classes = c.get_u64_or("classes", g.classes);
    g.snr_min_db = c.get_f64_or("snr_min", g.snr_min_db);
    g.snr_max_db = c.get_f64_or("snr_max", g.snr_max_db);
    g.snr_step_db = c.get_f64_or("snr_step", g.snr_step_db);
    g.per_cell = c.get_u64_or("per_cell", g.per_cell);
    g.domain = domain_from_name(c.get_or("domain", domain_name(g.domain)));
    g.n_cnn = static_cast<int>(c.get_i64_or("n_cnn", g.n_cnn));
    g.seed = c.get_u64_or("seed", g.seed);
    g.validate();
    return g;
}

Config GenerationConfig::to_config() const {
    Config c;
    c.set_u64("classes", classes);
    c.set_f64("snr_min", snr_min_db);
    c.set_f64("snr_max", snr_max_db);
    c.set_f64("snr_step", snr_step_db);
    c.set_u64("per_cell", per_cell);
    c.set("domain", domain_name(domain));
    c.set_i64("n_cnn", n_cnn);
    c.set_u64("seed", seed);
    return c;
}

std::vector<double> GenerationConfig::snr_grid() const {
    validate();
    std::vector<double> grid;
    const auto n = static_cast<std::size_t>(
        std::floor((snr_max_db - snr_min_db) / snr_step_db + 0.5) + 1);
    grid.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        grid.push_back(snr_min_db + snr_step_db * static_cast<double>(i));
    return grid;
}

void GenerationConfig::validate() const {
    if (classes == 0 || classes > static_cast<std::size_t>(kClassCount))
        throw std::invalid_argument("dataset config: classes must be 1..15");
    if (per_cell == 0) throw std::invalid_argument("dataset config: per_cell must be positive");
    if (snr_step_db <= 0.0) throw std::invalid_argument("dataset config: snr_step must be positive");
    if (snr_max_db < snr_min_db)
        throw std::invalid_argument("dataset config: snr_max below snr_min");
    if (n_cnn < 1 || n_cnn > 8)
        throw std::invalid_argument("dataset config: n_cnn must be 1..8");
}

bool Dataset::operator==(const Dataset& other) const {
    return split == other.split &&
           config.to_config().serialize() == other.config.to_config().serialize() &&
           examples == other.examples;
}

std::pair<Dataset, Dataset> generate_dataset_pair(GenerationConfig cfg, Split split) {
    cfg.validate();
    const ChannelMap map{cfg.n_cnn};
    const auto labels = class_set(map);
    const auto grid = cfg.snr_grid();

    std::pair<Dataset, Dataset> out;
    out.first.split = out.second.split = split;
    cfg.domain = acq::Domain::Time;
    out.first.config = cfg;
    cfg.domain = acq::Domain::Frequency;
    out.second.config = cfg;

    const std::size_t total = cfg.classes * grid.size() * cfg.per_cell;
    out.first.examples.resize(total);
    out.second.examples.resize(total);
    std::size_t pos = 0;
    for (std::size_t ci = 0; ci < cfg.classes; ++ci) {
        for (std::size_t si = 0; si < grid.size(); ++si) {
            for (std::size_t k = 0; k < cfg.per_cell; ++k, ++pos) {
                Rng rng(derive_seed(cfg.seed, split_stream(split), pos));
                make_example_pair(labels[ci], grid[si], map, rng, out.first.examples[pos],
                                  out.second.examples[pos]);
            }
        }
    }
    return out;
}

Dataset generate_dataset(const GenerationConfig& cfg, Split split) {
    auto pair = generate_dataset_pair(cfg, split);
    Dataset d = cfg.domain == acq::Domain::Time ? std::move(pair.first) : std::move(pair.second);
    d.config = cfg;
    return d;
}

void save_dataset(const Dataset& d, const std::string& path) {
    if (d.examples.size() > 0xffffffffULL)
        throw std::invalid_argument("save_dataset: too many examples for the format");
    const auto grid = d.config.snr_grid();
    if (grid.size() > 255) throw std::invalid_argument("save_dataset: snr grid too long");

    auto os = open_output(path);
    write_bytes(os, kMagic, sizeof kMagic);
    write_u16(os, kVersion);
    write_u32(os, static_cast<std::uint32_t>(d.examples.size()));
    write_u8(os, static_cast<std::uint8_t>(d.config.domain));
    write_u8(os, static_cast<std::uint8_t>(grid.size()));
    write_u64(os, d.config.seed);

    Config meta = d.config.to_config();
    meta.set("split", split_name(d.split));
    const std::string text = meta.serialize();
    write_u32(os, static_cast<std::uint32_t>(text.size()));
    write_bytes(os, text.data(), text.size());

    for (const Example& ex : d.examples) {
        write_u8(os, static_cast<std::uint8_t>(ex.label.technology));
        write_u8(os, static_cast<std::uint8_t>(ex.label.relative_channel));
        write_i16(os, ex.snr_centi_db);
        for (double v : ex.matrix.v) write_f32(os, static_cast<float>(v));
    }
    os.flush();
    if (!os) throw IoError("save_dataset: write failed: " + path);
}

Dataset load_dataset(const std::string& path) {
    auto is = open_input(path);
    char magic[6];
    read_exact(is, magic, sizeof magic, "magic");
    for (std::size_t i = 0; i < sizeof magic; ++i)
        if (magic[i] != kMagic[i]) throw FormatError("load_dataset: bad magic in " + path);
    const std::uint16_t version = read_u16(is, "version");
    if (version != kVersion)
        throw FormatError("load_dataset: unsupported version " + std::to_string(version));
    const std::uint32_t count = read_u32(is, "count");
    const std::uint8_t domain_byte = read_u8(is, "domain");
    if (domain_byte > 1) throw FormatError("load_dataset: bad domain flag");
    const std::uint8_t grid_len = read_u8(is, "grid length");
    const std::uint64_t seed = read_u64(is, "seed");

    const std::uint32_t text_len = read_u32(is, "config block length");
    if (text_len > (1u << 20)) throw FormatError("load_dataset: implausible config block");
    std::string text(text_len, '\0');
    read_exact(is, text.data(), text_len, "config block");

    Dataset d;
    try {
        const Config meta = Config::parse(text);
        d.config = GenerationConfig::from_config(meta);
        const std::string split = meta.get("split");
        if (split == "train")
            d.split = Split::Train;
        else if (split == "validation")
            d.split = Split::Validation;
        else
            throw std::invalid_argument("unknown split '" + split + "'");
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(std::string("load_dataset: bad config block: ") + e.what());
    }
    if (static_cast<acq::Domain>(domain_byte) != d.config.domain)
        throw FormatError("load_dataset: domain flag disagrees with config block");
    if (d.config.snr_grid().size() != grid_len)
        throw FormatError("load_dataset: snr grid length disagrees with config block");
    if (seed != d.config.seed)
        throw FormatError("load_dataset: seed disagrees with config block");

    d.examples.resize(count);
    for (Example& ex : d.examples) {
        const std::uint8_t tech = read_u8(is, "example technology");
        if (tech > 2) throw FormatError("load_dataset: bad technology byte");
        ex.label.technology = static_cast<Technology>(tech);
        const std::uint8_t rch = read_u8(is, "example channel");
        if (rch >= static_cast<std::uint8_t>(relative_channel_count(ex.label.technology)))
            throw FormatError("load_dataset: relative channel out of range");
        ex.label.relative_channel = rch;
        ex.snr_centi_db = read_i16(is, "example snr");
        for (double& v : ex.matrix.v)
            v = static_cast<double>(read_f32(is, "example matrix"));
    }
    if (is.peek() != std::char_traits<char>::eof())
        throw FormatError("load_dataset: trailing data after last example");
    return d;
}

} // namespace wii::data
