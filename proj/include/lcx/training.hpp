#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lcx/nets.hpp"
#include "lcx/synthdata.hpp"

namespace lcx::train {

struct TrainConfig {
  int steps = 1000;
  int batch_size = 16;
  double learning_rate = 2e-3;
  std::uint64_t seed = 0;
  double r1_gamma = 1.0;          // GAN only
  int r1_interval = 4;            // GAN only: lazy R1, applied every k steps and scaled by k
  double ema_beta = 0.999;        // GAN only: generator weight averaging
  double mapping_lr_scale = 0.1;  // GAN only
  double beta1 = 0.0;
  double beta2 = 0.99;
  double final_lr_scale = 1.0;  // cosine decay to learning_rate * final_lr_scale; 1 keeps it constant
  int checkpoint_every = 0;  // 0 disables periodic checkpoints
  int eval_every = 100;
  int eval_samples = 200;

  void validate() const;
  bool operator==(const TrainConfig&) const = default;
};

nlohmann::json to_json(const TrainConfig& c);

// Learning-rate multiplier at `step` under the cosine schedule.
double lr_scale(const TrainConfig& c, int step);
// Missing keys keep `defaults`; unknown keys are rejected by the pipeline schema.
TrainConfig train_config_from_json(const nlohmann::json& j, const TrainConfig& defaults = {});

struct TrainReport {
  std::map<std::string, std::vector<std::pair<int, double>>> loss_curves;
  std::map<std::string, double> final_metrics;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
};

nlohmann::json to_json(const TrainReport& r);
TrainReport train_report_from_json(const nlohmann::json& j);

// Adam with per-parameter learning rates and exportable state.
class Adam {
 public:
  Adam(std::vector<std::pair<std::string, torch::Tensor>> params, std::vector<double> learning_rates,
       double beta1, double beta2, double eps = 1e-8);

  void zero_grad();
  void step(double lr_scale = 1.0);
  std::int64_t steps() const { return t_; }

  nets::NetworkParams state() const;
  void load_state(const nets::NetworkParams& state);

 private:
  std::vector<std::pair<std::string, torch::Tensor>> params_;
  std::vector<double> lrs_;
  std::vector<torch::Tensor> m_;
  std::vector<torch::Tensor> v_;
  double beta1_;
  double beta2_;
  double eps_;
  std::int64_t t_ = 0;
};

// Per-step randomness: a fresh generator seeded from (seed, tag, step), so a
// batch depends only on those three values.
at::Generator step_generator(std::uint64_t seed, const std::string& tag, std::int64_t step);
torch::Tensor sample_noise(at::Generator& gen, std::int64_t n, std::int64_t dim);

// Stacks sample images into [N, 1, R, R] and labels into [N].
torch::Tensor stack_images(const std::vector<synth::LabeledSample>& samples);
torch::Tensor stack_labels(const std::vector<synth::LabeledSample>& samples);

struct CheckpointOptions {
  std::filesystem::path dir;  // empty: no checkpoints
  bool resume = false;        // continue from the newest checkpoint in dir
  std::function<void(const std::string&)> log;  // progress lines at eval steps
};

struct GanResult {
  nets::NetworkParams mapping;    // weight-averaged
  nets::NetworkParams synthesis;  // weight-averaged
  nets::NetworkParams discriminator;
  TrainReport report;
};

// Non-saturating logistic GAN loss with R1 penalty (gamma/2 * E||grad_x D(x)||^2
// over real batches). Reports the measurable-gap fraction over
// config.eval_samples generated images. TrainingFailure on non-finite losses
// or when the discriminator loss stays below 1e-4 for 500 consecutive steps.
GanResult train_gan(const synth::DatasetSplit& dataset, const nets::GeneratorSpec& g_spec,
                    const nets::DiscriminatorSpec& d_spec, const TrainConfig& config,
                    const CheckpointOptions& ckpt = {});

// R1 term for one real batch; exposed for tests.
torch::Tensor r1_penalty(nets::Discriminator& disc, const torch::Tensor& real, double gamma);

struct EncoderResult {
  nets::NetworkParams encoder;
  TrainReport report;
};

// Trains E on freshly sampled pairs (w = mapping(z), G(w)) minimising
// mean((E(G(w)) - w)^2).
EncoderResult train_encoder(const nets::NetworkParams& mapping, const nets::NetworkParams& synthesis,
                            const nets::EncoderSpec& e_spec, const TrainConfig& config,
                            const CheckpointOptions& ckpt = {});

// The encoder objective on one batch of noise (mean over batch and latent dims).
torch::Tensor encoder_objective(nets::MappingNet& mapping, nets::SynthesisNet& synthesis, nets::Encoder& encoder,
                                const torch::Tensor& z);

struct EncoderMetrics {
  double median_relative_error = 0.0;  // ||E(G(w)) - w|| / ||w||
  double median_psnr = 0.0;            // G(E(G(w))) vs G(w), dB over [-1, 1]
};
EncoderMetrics evaluate_encoder(nets::MappingNet& mapping, nets::SynthesisNet& synthesis, nets::Encoder& encoder,
                                int n, std::uint64_t seed);

// Fraction of n generated images on which measure_gap succeeds.
double measurable_fraction(nets::MappingNet& mapping, nets::SynthesisNet& synthesis, int n, std::uint64_t seed);

struct ClassifierResult {
  nets::NetworkParams classifier;
  TrainReport report;
};

// Binary cross-entropy training; reports test AUC. DegenerateDataError when
// the training split holds a single class.
ClassifierResult train_classifier(const synth::DatasetSplit& dataset, const nets::ClassifierSpec& c_spec,
                                  const TrainConfig& config, const CheckpointOptions& ckpt = {});

}  // namespace lcx::train
