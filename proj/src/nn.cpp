#include "wii/nn.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wii/errors.hpp"
#include "wii/io.hpp"

namespace wii::nn {

namespace {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return n;
}

// Parameter tensor shapes in declaration order: conv [maps, C_in, kh, kw],
// dense [units, n_in]; bias [maps] / [units].
struct ParamShapes {
    std::vector<std::vector<std::size_t>> weights;
    std::vector<std::vector<std::size_t>> biases;
};

ParamShapes param_shapes(const NetworkSpec& spec) {
    spec.validate();
    ParamShapes out;
    const auto conv = spec.conv_shapes();
    std::size_t conv_i = 0;
    std::size_t width = 0; // flat width entering the next dense layer
    bool in_dense = false;
    for (const LayerSpec& l : spec.layers) {
        if (l.kind == LayerKind::Conv2d) {
            const auto& in = conv[conv_i];
            out.weights.push_back({l.maps, in[0], l.kh, l.kw});
            out.biases.push_back({l.maps});
            ++conv_i;
        } else {
            if (!in_dense) {
                width = shape_product({conv[conv_i][0], conv[conv_i][1], conv[conv_i][2]});
                in_dense = true;
            }
            out.weights.push_back({l.units, width});
            out.biases.push_back({l.units});
            width = l.units;
        }
    }
    return out;
}

void check_shape(bool ok, const char* msg) {
    if (!ok) throw ShapeError(msg);
}

// Fills mult with per-element inverted-dropout multipliers; the draw
// order (one uniform per element) is part of the reproducibility
// contract shared with dropout().
void draw_dropout(std::size_t n, double rate, Rng& rng, std::vector<double>& mult) {
    const double keep_scale = 1.0 / (1.0 - rate);
    mult.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        mult[i] = rng.uniform() < rate ? 0.0 : keep_scale;
}

} // namespace

Tensor::Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
    for (std::size_t d : shape)
        if (d == 0) throw ShapeError("Tensor: zero dimension");
    data.assign(shape_product(shape), 0.0);
}

void NetworkSpec::validate() const {
    if (layers.empty()) throw std::invalid_argument("NetworkSpec: no layers");
    for (std::size_t d : input)
        if (d == 0) throw std::invalid_argument("NetworkSpec: zero input dimension");
    std::set<std::string> names;
    bool seen_dense = false;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const LayerSpec& l = layers[i];
        if (l.name.empty() || !names.insert(l.name).second)
            throw std::invalid_argument("NetworkSpec: layer names must be nonempty and unique");
        if (l.kind == LayerKind::Conv2d) {
            if (seen_dense)
                throw std::invalid_argument("NetworkSpec: conv layer after dense layer");
            if (l.maps == 0 || l.kh == 0 || l.kw == 0)
                throw std::invalid_argument("NetworkSpec: conv layer with zero geometry");
        } else {
            seen_dense = true;
            if (l.units == 0) throw std::invalid_argument("NetworkSpec: dense layer with zero units");
        }
        if (!(l.dropout_rate >= 0.0 && l.dropout_rate < 1.0))
            throw std::invalid_argument("NetworkSpec: dropout rate outside [0,1)");
        if (l.activation == Activation::Softmax) {
            if (i + 1 != layers.size())
                throw std::invalid_argument("NetworkSpec: softmax only allowed on the last layer");
            if (l.dropout_rate != 0.0)
                throw std::invalid_argument("NetworkSpec: dropout after softmax");
        }
    }
    conv_shapes(); // throws ShapeError if a kernel does not fit
}

std::vector<std::array<std::size_t, 3>> NetworkSpec::conv_shapes() const {
    std::vector<std::array<std::size_t, 3>> shapes{input};
    for (const LayerSpec& l : layers) {
        if (l.kind != LayerKind::Conv2d) break;
        const auto& in = shapes.back();
        check_shape(l.kh <= in[1] && l.kw <= in[2], "conv kernel larger than its input");
        shapes.push_back({l.maps, in[1] - l.kh + 1, in[2] - l.kw + 1});
    }
    return shapes;
}

std::size_t NetworkSpec::flatten_size() const {
    const auto s = conv_shapes().back();
    return s[0] * s[1] * s[2];
}

std::size_t NetworkSpec::output_size() const {
    const LayerSpec& last = layers.back();
    if (last.kind == LayerKind::Dense) return last.units;
    return flatten_size();
}

NetworkSpec original_spec() {
    NetworkSpec s;
    s.id = "cnn-original";
    s.expected_flatten = 126976;
    s.layers = {
        {"conv1", LayerKind::Conv2d, 64, 3, 1, 0, Activation::ReLU, 0.0},
        {"conv2", LayerKind::Conv2d, 1024, 3, 2, 0, Activation::ReLU, 0.6},
        {"dense1", LayerKind::Dense, 0, 0, 0, 128, Activation::ReLU, 0.6},
        {"dense2", LayerKind::Dense, 0, 0, 0, kClassCount, Activation::Softmax, 0.0},
    };
    return s;
}

NetworkSpec reduced_spec() {
    NetworkSpec s;
    s.id = "cnn-reduced";
    s.expected_flatten = 1984;
    s.layers = {
        {"conv1", LayerKind::Conv2d, 8, 3, 1, 0, Activation::ReLU, 0.0},
        {"conv2", LayerKind::Conv2d, 16, 3, 2, 0, Activation::ReLU, 0.6},
        {"dense1", LayerKind::Dense, 0, 0, 0, 64, Activation::ReLU, 0.6},
        {"dense2", LayerKind::Dense, 0, 0, 0, kClassCount, Activation::Softmax, 0.0},
    };
    return s;
}

NetworkSpec spec_for_id(const std::string& id) {
    if (id == "cnn-original") return original_spec();
    if (id == "cnn-reduced") return reduced_spec();
    throw std::invalid_argument("unknown network spec id: " + id);
}

std::size_t param_count(const NetworkSpec& spec) {
    const ParamShapes shapes = param_shapes(spec);
    std::size_t total = 0;
    for (const auto& s : shapes.weights) total += shape_product(s);
    for (const auto& s : shapes.biases) total += shape_product(s);
    return total;
}

NetworkParams init_params(const NetworkSpec& spec, std::uint64_t seed) {
    const ParamShapes shapes = param_shapes(spec);
    NetworkParams p;
    p.spec_id = spec.id;
    p.init_seed = seed;
    Rng rng(seed);
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        Tensor w(shapes.weights[i]);
        const std::size_t fan_out = shapes.weights[i][0];
        std::size_t fan_in = 1;
        for (std::size_t d = 1; d < shapes.weights[i].size(); ++d) fan_in *= shapes.weights[i][d];
        std::size_t fan_out_eff = fan_out;
        if (spec.layers[i].kind == LayerKind::Conv2d)
            fan_out_eff = fan_out * spec.layers[i].kh * spec.layers[i].kw;
        const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out_eff));
        for (double& v : w.data) v = limit * (2.0 * rng.uniform() - 1.0);
        p.weights.push_back(std::move(w));
        p.biases.emplace_back(shapes.biases[i]);
    }
    return p;
}

Tensor conv2d_valid(const Tensor& input, const Tensor& kernels, const Tensor& bias) {
    check_shape(input.shape.size() == 3, "conv2d: input must be rank 3");
    check_shape(kernels.shape.size() == 4, "conv2d: kernels must be rank 4");
    const std::size_t c_in = input.shape[0], h = input.shape[1], w = input.shape[2];
    const std::size_t c_out = kernels.shape[0], kh = kernels.shape[2], kw = kernels.shape[3];
    check_shape(kernels.shape[1] == c_in, "conv2d: channel mismatch");
    check_shape(kh <= h && kw <= w, "conv2d: kernel larger than input");
    check_shape(bias.size() == c_out, "conv2d: bias size mismatch");
    const std::size_t oh = h - kh + 1, ow = w - kw + 1;

    Tensor out({c_out, oh, ow});
    for (std::size_t co = 0; co < c_out; ++co) {
        double* out_map = &out.data[co * oh * ow];
        std::fill(out_map, out_map + oh * ow, bias[co]);
        for (std::size_t ci = 0; ci < c_in; ++ci) {
            const double* in_map = &input.data[ci * h * w];
            const double* k_base = &kernels.data[((co * c_in + ci) * kh) * kw];
            for (std::size_t dy = 0; dy < kh; ++dy) {
                for (std::size_t dx = 0; dx < kw; ++dx) {
                    const double k = k_base[dy * kw + dx];
                    for (std::size_t y = 0; y < oh; ++y) {
                        const double* in_row = in_map + (y + dy) * w + dx;
                        double* out_row = out_map + y * ow;
                        for (std::size_t x = 0; x < ow; ++x) out_row[x] += k * in_row[x];
                    }
                }
            }
        }
    }
    return out;
}

Tensor dense(const Tensor& input, const Tensor& weights, const Tensor& bias) {
    check_shape(weights.shape.size() == 2, "dense: weights must be rank 2");
    const std::size_t m = weights.shape[0], n = weights.shape[1];
    // The input is read as a flat vector so conv outputs need no reshape.
    check_shape(input.size() == n, "dense: input width mismatch");
    check_shape(bias.size() == m, "dense: bias size mismatch");
    Tensor out({m});
    for (std::size_t i = 0; i < m; ++i) {
        const double* row = &weights.data[i * n];
        double s = bias[i];
        for (std::size_t j = 0; j < n; ++j) s += row[j] * input.data[j];
        out[i] = s;
    }
    return out;
}

Tensor relu(const Tensor& t) {
    Tensor out = t;
    for (double& v : out.data) v = v > 0.0 ? v : 0.0;
    return out;
}

Tensor softmax(const Tensor& t) {
    if (t.size() == 0) throw ShapeError("softmax: empty input");
    Tensor out = t;
    const double mx = *std::max_element(out.data.begin(), out.data.end());
    double sum = 0.0;
    for (double& v : out.data) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (double& v : out.data) v /= sum;
    return out;
}

Tensor dropout(const Tensor& t, double rate, Rng& rng, bool training) {
    if (!(rate >= 0.0 && rate < 1.0)) throw std::domain_error("dropout: rate outside [0,1)");
    if (!training || rate == 0.0) return t;
    std::vector<double> mult;
    draw_dropout(t.size(), rate, rng, mult);
    Tensor out = t;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= mult[i];
    return out;
}

double cross_entropy(const Tensor& probs, std::size_t label_index) {
    if (label_index >= probs.size()) throw std::domain_error("cross_entropy: label out of range");
    return -std::log(std::max(probs[label_index], 1e-12));
}

Tensor cross_entropy_logit_grad(const Tensor& probs, std::size_t label_index) {
    if (label_index >= probs.size())
        throw std::domain_error("cross_entropy_logit_grad: label out of range");
    Tensor g = probs;
    g[label_index] -= 1.0;
    return g;
}

void conv2d_backward(const Tensor& input, const Tensor& kernels, const Tensor& d_out,
                     Tensor& d_input, Tensor& d_kernels, Tensor& d_bias) {
    const std::size_t c_in = input.shape[0], h = input.shape[1], w = input.shape[2];
    const std::size_t c_out = kernels.shape[0], kh = kernels.shape[2], kw = kernels.shape[3];
    const std::size_t oh = h - kh + 1, ow = w - kw + 1;
    check_shape(d_out.size() == c_out * oh * ow, "conv2d_backward: output gradient size");
    check_shape(d_kernels.shape == kernels.shape, "conv2d_backward: kernel gradient shape");
    check_shape(d_bias.size() == c_out, "conv2d_backward: bias gradient size");

    d_input = Tensor({c_in, h, w});
    for (std::size_t co = 0; co < c_out; ++co) {
        const double* d_map = &d_out.data[co * oh * ow];
        double b = 0.0;
        for (std::size_t i = 0; i < oh * ow; ++i) b += d_map[i];
        d_bias[co] += b;
        for (std::size_t ci = 0; ci < c_in; ++ci) {
            const double* in_map = &input.data[ci * h * w];
            double* din_map = &d_input.data[ci * h * w];
            const std::size_t k_base = (co * c_in + ci) * kh * kw;
            for (std::size_t dy = 0; dy < kh; ++dy) {
                for (std::size_t dx = 0; dx < kw; ++dx) {
                    const double k = kernels.data[k_base + dy * kw + dx];
                    double s = 0.0;
                    for (std::size_t y = 0; y < oh; ++y) {
                        const double* in_row = in_map + (y + dy) * w + dx;
                        double* din_row = din_map + (y + dy) * w + dx;
                        const double* d_row = d_map + y * ow;
                        for (std::size_t x = 0; x < ow; ++x) {
                            s += d_row[x] * in_row[x];
                            din_row[x] += k * d_row[x];
                        }
                    }
                    d_kernels.data[k_base + dy * kw + dx] += s;
                }
            }
        }
    }
}

void dense_backward(const Tensor& input, const Tensor& weights, const Tensor& d_out,
                    Tensor& d_input, Tensor& d_weights, Tensor& d_bias) {
    const std::size_t m = weights.shape[0], n = weights.shape[1];
    check_shape(input.size() == n, "dense_backward: input width");
    check_shape(d_out.size() == m, "dense_backward: output gradient size");
    check_shape(d_weights.shape == weights.shape, "dense_backward: weight gradient shape");
    check_shape(d_bias.size() == m, "dense_backward: bias gradient size");

    d_input = Tensor({n});
    for (std::size_t i = 0; i < m; ++i) {
        const double g = d_out[i];
        d_bias[i] += g;
        const double* row = &weights.data[i * n];
        double* dw_row = &d_weights.data[i * n];
        for (std::size_t j = 0; j < n; ++j) {
            dw_row[j] += g * input.data[j];
            d_input[j] += g * row[j];
        }
    }
}

Tensor to_tensor(const acq::InputMatrix& m) {
    Tensor t({1, acq::kSnapshotLength, 2});
    std::copy(m.v.begin(), m.v.end(), t.data.begin());
    return t;
}

namespace {

struct LayerCache {
    Tensor act;                    // post-activation, pre-dropout
    std::vector<double> drop_mult; // empty when dropout was not applied
    Tensor out;                    // fed to the next layer
};

// Shared by forward() and accumulate_gradients(); caches may be null.
Tensor run_forward(const NetworkSpec& spec, const NetworkParams& params, const Tensor& input,
                   Mode mode, Rng* rng, std::vector<LayerCache>* caches) {
    if (params.weights.size() != spec.layers.size() || params.biases.size() != spec.layers.size())
        throw ShapeError("forward: parameter count does not match the spec");
    const Tensor* cur = &input;
    Tensor next;
    bool checked_flatten = false;
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        const LayerSpec& l = spec.layers[i];
        if (l.kind == LayerKind::Dense && !checked_flatten) {
            checked_flatten = true;
            if (spec.expected_flatten != 0 && cur->size() != spec.expected_flatten)
                throw ShapeError("forward: flatten width " + std::to_string(cur->size()) +
                                 " does not match the declared " +
                                 std::to_string(spec.expected_flatten));
        }
        Tensor z = l.kind == LayerKind::Conv2d
                       ? conv2d_valid(*cur, params.weights[i], params.biases[i])
                       : dense(*cur, params.weights[i], params.biases[i]);
        switch (l.activation) {
            case Activation::Identity: break;
            case Activation::ReLU:
                for (double& v : z.data) v = v > 0.0 ? v : 0.0;
                break;
            case Activation::Softmax: z = softmax(z); break;
        }
        LayerCache* c = nullptr;
        if (caches) {
            c = &(*caches)[i];
            c->act = z;
            c->drop_mult.clear();
        }
        if (l.dropout_rate > 0.0 && mode == Mode::Train) {
            if (!rng)
                throw std::invalid_argument("forward: training with dropout needs an rng");
            std::vector<double> mult;
            draw_dropout(z.size(), l.dropout_rate, *rng, mult);
            for (std::size_t j = 0; j < z.size(); ++j) z[j] *= mult[j];
            if (c) c->drop_mult = std::move(mult);
        }
        if (c) {
            c->out = std::move(z);
            cur = &c->out;
        } else {
            next = std::move(z);
            cur = &next;
        }
    }
    return *cur;
}

} // namespace

Tensor forward(const NetworkSpec& spec, const NetworkParams& params, const Tensor& input,
               Mode mode, Rng* rng) {
    return run_forward(spec, params, input, mode, rng, nullptr);
}

Tensor forward(const NetworkSpec& spec, const NetworkParams& params,
               const acq::InputMatrix& input, Mode mode, Rng* rng) {
    return run_forward(spec, params, to_tensor(input), mode, rng, nullptr);
}

void Gradients::zero() {
    for (Tensor& t : weights) std::fill(t.data.begin(), t.data.end(), 0.0);
    for (Tensor& t : biases) std::fill(t.data.begin(), t.data.end(), 0.0);
}

void Gradients::scale(double s) {
    for (Tensor& t : weights)
        for (double& v : t.data) v *= s;
    for (Tensor& t : biases)
        for (double& v : t.data) v *= s;
}

Gradients make_gradients(const NetworkParams& params) {
    Gradients g;
    for (const Tensor& w : params.weights) g.weights.emplace_back(w.shape);
    for (const Tensor& b : params.biases) g.biases.emplace_back(b.shape);
    return g;
}

ExampleResult accumulate_gradients(const NetworkSpec& spec, const NetworkParams& params,
                                   const Tensor& input, std::size_t label_index,
                                   Rng* dropout_rng, Gradients& acc) {
    const std::size_t n_layers = spec.layers.size();
    if (spec.layers.back().activation != Activation::Softmax)
        throw std::invalid_argument("accumulate_gradients: the last layer must be softmax");
    if (acc.weights.size() != n_layers || acc.biases.size() != n_layers)
        throw ShapeError("accumulate_gradients: accumulator does not match the spec");

    std::vector<LayerCache> caches(n_layers);
    const Mode mode = dropout_rng ? Mode::Train : Mode::Infer;
    run_forward(spec, params, input, mode, dropout_rng, &caches);

    const Tensor& probs = caches.back().out;
    ExampleResult res;
    res.loss = cross_entropy(probs, label_index);
    res.predicted = static_cast<std::size_t>(
        std::max_element(probs.data.begin(), probs.data.end()) - probs.data.begin());

    // Softmax + cross-entropy collapse to probs - onehot at the last
    // layer's pre-activation.
    Tensor d = cross_entropy_logit_grad(probs, label_index);
    for (std::size_t ri = n_layers; ri-- > 0;) {
        const LayerSpec& l = spec.layers[ri];
        const LayerCache& c = caches[ri];
        if (ri + 1 != n_layers) {
            // d arrives w.r.t. the layer output: undo dropout, then the
            // activation, to reach the pre-activation.
            if (!c.drop_mult.empty())
                for (std::size_t j = 0; j < d.size(); ++j) d[j] *= c.drop_mult[j];
            if (l.activation == Activation::ReLU)
                for (std::size_t j = 0; j < d.size(); ++j)
                    if (!(c.act[j] > 0.0)) d[j] = 0.0;
        }
        const Tensor& layer_in = ri == 0 ? input : caches[ri - 1].out;
        Tensor d_in;
        if (l.kind == LayerKind::Conv2d)
            conv2d_backward(layer_in, params.weights[ri], d, d_in, acc.weights[ri],
                            acc.biases[ri]);
        else
            dense_backward(layer_in, params.weights[ri], d, d_in, acc.weights[ri],
                           acc.biases[ri]);
        d = std::move(d_in);
    }
    return res;
}

namespace {

void write_tensor(std::ostream& os, const Tensor& t) {
    write_u8(os, static_cast<std::uint8_t>(t.shape.size()));
    for (std::size_t d : t.shape) write_u32(os, static_cast<std::uint32_t>(d));
    for (double v : t.data) write_f32(os, static_cast<float>(v));
}

Tensor read_tensor(std::istream& is, const std::vector<std::size_t>& expect,
                   const std::string& what) {
    const std::size_t rank = read_u8(is, "tensor rank");
    if (rank != expect.size())
        throw FormatError("checkpoint: rank mismatch for " + what);
    std::vector<std::size_t> shape(rank);
    for (std::size_t i = 0; i < rank; ++i) shape[i] = read_u32(is, "tensor dim");
    if (shape != expect) throw FormatError("checkpoint: shape mismatch for " + what);
    Tensor t(shape);
    for (double& v : t.data) v = static_cast<double>(read_f32(is, "tensor data"));
    return t;
}

std::string read_string(std::istream& is, const char* what) {
    const std::uint32_t len = read_u32(is, what);
    if (len > 4096) throw FormatError(std::string("checkpoint: oversized ") + what);
    std::string s(len, '\0');
    read_exact(is, s.data(), len, what);
    return s;
}

constexpr char kMagic[6] = {'W', 'I', 'I', 'N', 'N', '1'};
constexpr std::uint16_t kVersion = 1;

} // namespace

void save_params(const NetworkParams& params, const NetworkSpec& spec,
                 const std::string& path) {
    if (params.spec_id != spec.id)
        throw std::invalid_argument("save_params: parameters belong to spec '" +
                                    params.spec_id + "', not '" + spec.id + "'");
    if (params.weights.size() != spec.layers.size())
        throw ShapeError("save_params: parameter count does not match the spec");
    std::ofstream os = open_output(path);
    write_bytes(os, kMagic, sizeof kMagic);
    write_u16(os, kVersion);
    write_u32(os, static_cast<std::uint32_t>(spec.id.size()));
    write_bytes(os, spec.id.data(), spec.id.size());
    write_u64(os, params.init_seed);
    write_u32(os, static_cast<std::uint32_t>(spec.layers.size()));
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        const std::string& name = spec.layers[i].name;
        write_u32(os, static_cast<std::uint32_t>(name.size()));
        write_bytes(os, name.data(), name.size());
        write_tensor(os, params.weights[i]);
        write_tensor(os, params.biases[i]);
    }
    os.flush();
    if (!os) throw IoError("save_params: write failed: " + path);
}

NetworkParams load_params(const NetworkSpec& spec, const std::string& path) {
    const ParamShapes shapes = param_shapes(spec);
    std::ifstream is = open_input(path);
    char magic[6];
    read_exact(is, magic, sizeof magic, "magic");
    if (!std::equal(magic, magic + 6, kMagic))
        throw FormatError("checkpoint: bad magic in " + path);
    const std::uint16_t version = read_u16(is, "version");
    if (version != kVersion)
        throw FormatError("checkpoint: unsupported version " + std::to_string(version));
    const std::string id = read_string(is, "spec id");
    if (id != spec.id)
        throw FormatError("checkpoint: holds spec '" + id + "', expected '" + spec.id + "'");
    NetworkParams p;
    p.spec_id = id;
    p.init_seed = read_u64(is, "init seed");
    const std::uint32_t n_layers = read_u32(is, "layer count");
    if (n_layers != spec.layers.size())
        throw FormatError("checkpoint: layer count mismatch");
    for (std::size_t i = 0; i < n_layers; ++i) {
        const std::string name = read_string(is, "layer name");
        if (name != spec.layers[i].name)
            throw FormatError("checkpoint: layer name '" + name + "', expected '" +
                              spec.layers[i].name + "'");
        p.weights.push_back(read_tensor(is, shapes.weights[i], name + " weights"));
        p.biases.push_back(read_tensor(is, shapes.biases[i], name + " bias"));
    }
    if (is.peek() != std::ifstream::traits_type::eof())
        throw FormatError("checkpoint: trailing data in " + path);
    return p;
}

std::pair<NetworkSpec, NetworkParams> load_checkpoint(const std::string& path) {
    std::string id;
    {
        std::ifstream is = open_input(path);
        char magic[6];
        read_exact(is, magic, sizeof magic, "magic");
        if (!std::equal(magic, magic + 6, kMagic))
            throw FormatError("checkpoint: bad magic in " + path);
        const std::uint16_t version = read_u16(is, "version");
        if (version != kVersion)
            throw FormatError("checkpoint: unsupported version " + std::to_string(version));
        id = read_string(is, "spec id");
    }
    NetworkSpec spec = spec_for_id(id); // invalid_argument for foreign ids
    NetworkParams params = load_params(spec, path);
    return {std::move(spec), std::move(params)};
}

} // namespace wii::nn
