#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wii/errors.hpp"
#include "wii/nn.hpp"

namespace wii::nn {

namespace {

// Sub-streams of the training seed, so initialization, shuffling and
// dropout stay decorrelated and individually reproducible.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kShuffleStream = 2;
constexpr std::uint64_t kDropoutStream = 3;

void adam_update(Tensor& p, const Tensor& g, Tensor& m, Tensor& v, const AdamState& s,
                 double bc1, double bc2, const std::string& where) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double gi = g[i];
        if (!std::isfinite(gi))
            throw NumericError("adam_step: non-finite gradient in " + where);
        m[i] = s.beta1 * m[i] + (1.0 - s.beta1) * gi;
        v[i] = s.beta2 * v[i] + (1.0 - s.beta2) * gi * gi;
        const double mhat = m[i] / bc1;
        const double vhat = v[i] / bc2;
        p[i] -= s.lr * mhat / (std::sqrt(vhat) + s.eps);
    }
}

} // namespace

AdamState make_adam(const NetworkParams& params, double lr) {
    if (!(lr > 0.0)) throw std::invalid_argument("make_adam: learning rate must be positive");
    AdamState s;
    s.lr = lr;
    for (const Tensor& w : params.weights) {
        s.m_w.emplace_back(w.shape);
        s.v_w.emplace_back(w.shape);
    }
    for (const Tensor& b : params.biases) {
        s.m_b.emplace_back(b.shape);
        s.v_b.emplace_back(b.shape);
    }
    return s;
}

void adam_step(NetworkParams& params, const NetworkSpec& spec, const Gradients& grads,
               AdamState& state) {
    if (state.m_w.size() != params.weights.size() ||
        grads.weights.size() != params.weights.size())
        throw ShapeError("adam_step: state/gradient layout does not match the parameters");
    state.t += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));
    for (std::size_t i = 0; i < params.weights.size(); ++i) {
        const std::string& name = spec.layers[i].name;
        adam_update(params.weights[i], grads.weights[i], state.m_w[i], state.v_w[i], state,
                    bc1, bc2, "layer '" + name + "' weights");
        adam_update(params.biases[i], grads.biases[i], state.m_b[i], state.v_b[i], state,
                    bc1, bc2, "layer '" + name + "' bias");
    }
}

TrainResult train(const NetworkSpec& spec, const data::Dataset& dataset,
                  const TrainHyper& hyper) {
    spec.validate();
    if (dataset.examples.empty()) throw std::invalid_argument("train: empty dataset");
    if (!(hyper.lr > 0.0)) throw std::invalid_argument("train: learning rate must be positive");
    if (hyper.batch == 0) throw std::invalid_argument("train: batch size must be positive");
    if (!(hyper.min_rel_improve >= 0.0))
        throw std::invalid_argument("train: min_rel_improve must be nonnegative");

    const std::size_t n = dataset.examples.size();
    const std::size_t n_classes = spec.output_size();
    std::vector<Tensor> inputs;
    std::vector<std::size_t> labels;
    inputs.reserve(n);
    labels.reserve(n);
    for (const data::Example& ex : dataset.examples) {
        inputs.push_back(to_tensor(ex.matrix));
        const std::size_t idx = static_cast<std::size_t>(class_index(ex.label));
        if (idx >= n_classes)
            throw std::invalid_argument("train: label index " + std::to_string(idx) +
                                        " outside the " + std::to_string(n_classes) +
                                        "-way output");
        labels.push_back(idx);
    }

    TrainResult result;
    result.params = init_params(spec, derive_seed(hyper.seed, kInitStream, 0));
    if (hyper.max_epochs == 0) return result;

    AdamState adam = make_adam(result.params, hyper.lr);
    Gradients grads = make_gradients(result.params);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    double best_loss = std::numeric_limits<double>::infinity();
    std::size_t stall = 0;
    for (std::size_t epoch = 0; epoch < hyper.max_epochs; ++epoch) {
        Rng shuffle_rng(derive_seed(hyper.seed, kShuffleStream, epoch));
        shuffle_rng.shuffle(order);
        Rng dropout_rng(derive_seed(hyper.seed, kDropoutStream, epoch));

        double loss_sum = 0.0;
        std::size_t correct = 0;
        for (std::size_t start = 0; start < n; start += hyper.batch) {
            const std::size_t end = std::min(start + hyper.batch, n);
            grads.zero();
            for (std::size_t k = start; k < end; ++k) {
                const std::size_t e = order[k];
                const ExampleResult r =
                    accumulate_gradients(spec, result.params, inputs[e], labels[e],
                                         &dropout_rng, grads);
                if (!std::isfinite(r.loss))
                    throw NumericError("train: loss diverged at epoch " +
                                       std::to_string(epoch) + ", batch " +
                                       std::to_string(start / hyper.batch));
                loss_sum += r.loss;
                correct += r.predicted == labels[e] ? 1 : 0;
            }
            grads.scale(1.0 / static_cast<double>(end - start));
            try {
                adam_step(result.params, spec, grads, adam);
            } catch (const NumericError& err) {
                throw NumericError(std::string(err.what()) + " (epoch " +
                                   std::to_string(epoch) + ", batch " +
                                   std::to_string(start / hyper.batch) + ")");
            }
        }
        const double epoch_loss = loss_sum / static_cast<double>(n);
        result.history.push_back(
            {epoch_loss, static_cast<double>(correct) / static_cast<double>(n)});

        if (epoch_loss < best_loss * (1.0 - hyper.min_rel_improve)) {
            best_loss = epoch_loss;
            stall = 0;
        } else if (++stall >= hyper.patience) {
            break;
        }
    }

    // Quantize once trained so the in-memory result equals its own
    // checkpoint value-for-value.
    for (Tensor& t : result.params.weights)
        for (double& v : t.data) v = static_cast<double>(static_cast<float>(v));
    for (Tensor& t : result.params.biases)
        for (double& v : t.data) v = static_cast<double>(static_cast<float>(v));
    return result;
}

} // namespace wii::nn
