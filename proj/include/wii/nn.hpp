#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wii/acquisition.hpp"
#include "wii/dataset.hpp"
#include "wii/rng.hpp"

namespace wii::nn {

// Dense row-major value container.  Every operation keeps data length
// equal to the shape product; math accumulates in double precision.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s);

    std::size_t size() const { return data.size(); }
    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    bool operator==(const Tensor&) const = default;
};

enum class LayerKind : std::uint8_t { Conv2d, Dense };
enum class Activation : std::uint8_t { Identity, ReLU, Softmax };

// One layer of the fixed feed-forward topology: a stack of valid 2-D
// convolutions followed by a stack of dense layers.  dropout_rate > 0
// applies inverted dropout to the post-activation output while training.
struct LayerSpec {
    std::string name;
    LayerKind kind = LayerKind::Dense;
    std::size_t maps = 0; // Conv2d: output channels
    std::size_t kh = 0;   // Conv2d: kernel height
    std::size_t kw = 0;   // Conv2d: kernel width
    std::size_t units = 0; // Dense: output width
    Activation activation = Activation::ReLU;
    double dropout_rate = 0.0;
};

struct NetworkSpec {
    std::string id;
    std::array<std::size_t, 3> input{1, acq::kSnapshotLength, 2}; // C, H, W
    std::vector<LayerSpec> layers;
    // When nonzero, forward() checks the conv-to-dense flatten width
    // against this and throws ShapeError on mismatch.
    std::size_t expected_flatten = 0;

    // Throws ShapeError / std::invalid_argument on an inconsistent spec
    // (kernel larger than its input, dense before conv, softmax anywhere
    // but last, dropout outside [0,1), duplicate names).
    void validate() const;

    // Activation shape after each conv layer, starting with the input.
    std::vector<std::array<std::size_t, 3>> conv_shapes() const;

    // Width of the conv-stack output once flattened.
    std::size_t flatten_size() const;

    // Output width of the final layer.
    std::size_t output_size() const;
};

// The two fixed classifier topologies (15-way softmax over 128x2 inputs).
NetworkSpec original_spec();
NetworkSpec reduced_spec();

// Looks up a spec by its id; throws std::invalid_argument for ids other
// than the two fixed topologies.
NetworkSpec spec_for_id(const std::string& id);

// Exact trainable-parameter total (weights + biases).
std::size_t param_count(const NetworkSpec& spec);

struct NetworkParams {
    std::string spec_id;
    std::uint64_t init_seed = 0;
    std::vector<Tensor> weights; // one per layer, declaration order
    std::vector<Tensor> biases;

    bool operator==(const NetworkParams&) const = default;
};

// Fan-scaled uniform init: weights uniform on +-sqrt(6/(fan_in+fan_out)),
// biases zero.  Same seed -> same parameters.
NetworkParams init_params(const NetworkSpec& spec, std::uint64_t seed);

// --- primitive ops (exposed for direct testing) ---

// Valid cross-correlation, stride 1: [C_in,H,W] * [C_out,C_in,kh,kw] ->
// [C_out,H-kh+1,W-kw+1].  Throws ShapeError on mismatched shapes.
Tensor conv2d_valid(const Tensor& input, const Tensor& kernels, const Tensor& bias);

// Affine map W x + b: [n] * [m,n] -> [m].
Tensor dense(const Tensor& input, const Tensor& weights, const Tensor& bias);

Tensor relu(const Tensor& t);

// Max-stabilized softmax over a vector; output sums to 1.
Tensor softmax(const Tensor& t);

// Inverted dropout: while training, zeroes each element with probability
// rate and scales survivors by 1/(1-rate); identity otherwise.  Throws
// std::domain_error for rate outside [0,1).
Tensor dropout(const Tensor& t, double rate, Rng& rng, bool training);

// -log(probs[label]), clamped at 1e-12.  Throws std::domain_error for an
// out-of-range label.
double cross_entropy(const Tensor& probs, std::size_t label_index);

// Gradient of cross_entropy(softmax(z), label) w.r.t. the logits z.
Tensor cross_entropy_logit_grad(const Tensor& probs, std::size_t label_index);

// Parameter and input gradients given the upstream output gradient;
// accumulates (+=) into d_kernels/d_bias so batch sums build in place.
void conv2d_backward(const Tensor& input, const Tensor& kernels, const Tensor& d_out,
                     Tensor& d_input, Tensor& d_kernels, Tensor& d_bias);
void dense_backward(const Tensor& input, const Tensor& weights, const Tensor& d_out,
                    Tensor& d_input, Tensor& d_weights, Tensor& d_bias);

// --- whole-network passes ---

enum class Mode : std::uint8_t { Infer, Train };

// Class-probability vector.  Train mode applies dropout and needs rng
// when any layer declares it; infer mode is deterministic.
Tensor forward(const NetworkSpec& spec, const NetworkParams& params, const Tensor& input,
               Mode mode = Mode::Infer, Rng* rng = nullptr);
Tensor forward(const NetworkSpec& spec, const NetworkParams& params,
               const acq::InputMatrix& input, Mode mode = Mode::Infer, Rng* rng = nullptr);

// [1, H, W] tensor view of an input matrix.
Tensor to_tensor(const acq::InputMatrix& m);

// Per-layer gradient accumulators shaped like the parameters.
struct Gradients {
    std::vector<Tensor> weights;
    std::vector<Tensor> biases;

    void zero();
    void scale(double s);
};

Gradients make_gradients(const NetworkParams& params);

struct ExampleResult {
    double loss = 0.0;
    std::size_t predicted = 0;
};

// Forward + reverse pass for one example, adding this example's parameter
// gradients into acc.  dropout_rng == nullptr differentiates the
// dropout-free network (used by finite-difference checks); otherwise the
// dropout masks drawn forward are reapplied exactly in reverse.
ExampleResult accumulate_gradients(const NetworkSpec& spec, const NetworkParams& params,
                                   const Tensor& input, std::size_t label_index,
                                   Rng* dropout_rng, Gradients& acc);

// --- optimizer & training ---

struct AdamState {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::uint64_t t = 0;
    std::vector<Tensor> m_w, v_w, m_b, v_b;
};

AdamState make_adam(const NetworkParams& params, double lr);

// One bias-corrected Adam update from (already averaged) gradients.
// Throws NumericError naming the layer if a gradient is non-finite.
void adam_step(NetworkParams& params, const NetworkSpec& spec, const Gradients& grads,
               AdamState& state);

struct TrainHyper {
    double lr = 1e-3;
    std::size_t max_epochs = 200;
    std::size_t batch = 1024;
    std::uint64_t seed = 1;
    // Early stop: quit once the epoch train loss has not improved on the
    // best seen by at least min_rel_improve, patience epochs in a row.
    std::size_t patience = 15;
    double min_rel_improve = 1e-3;
};

struct EpochMetrics {
    double loss = 0.0;     // mean per-example training loss
    double accuracy = 0.0; // fraction of training passes that predicted the label
};

struct TrainResult {
    NetworkParams params;
    std::vector<EpochMetrics> history;
};

// Mini-batch Adam with a seeded per-epoch shuffle; the final partial
// batch is trained on.  Metrics come from the training passes themselves
// (dropout active).  The returned parameters are quantized to float32
// values so they match their own checkpoint exactly.  Throws
// std::invalid_argument for an empty dataset or bad hyperparameters and
// NumericError (with epoch/batch) if the loss diverges.
TrainResult train(const NetworkSpec& spec, const data::Dataset& dataset,
                  const TrainHyper& hyper);

// --- checkpoint io ---

// Binary format "WIINN1": magic, u16 version, length-prefixed spec id,
// u64 init seed, u32 layer count, then per layer a length-prefixed name
// and the weight and bias tensors (u8 rank, u32 dims, little-endian f32
// values) in declaration order.  save -> load -> save is byte-identical.
void save_params(const NetworkParams& params, const NetworkSpec& spec,
                 const std::string& path);
NetworkParams load_params(const NetworkSpec& spec, const std::string& path);

// Reads the spec id from a checkpoint and loads it as the matching fixed
// topology (original/reduced).
std::pair<NetworkSpec, NetworkParams> load_checkpoint(const std::string& path);

} // namespace wii::nn
