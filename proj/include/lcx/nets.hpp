#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcx/image.hpp"

// The four networks of the method plus the adversarial critic:
// a style-based generator (mapping MLP z -> w and a synthesis stack modulated
// by w), a discriminator, an encoder X -> W and the black-box binary
// classifier. Inference helpers always evaluate one sample at a time so a
// result never depends on what else shares its batch.
namespace lcx::nets {

using LatentVector = std::vector<float>;

struct GeneratorSpec {
  int noise_dim = 64;
  int latent_dim = 64;
  int mapping_layers = 4;
  int base_channels = 64;  // channels at 4x4 and 8x8; halves with each further doubling
  int resolution = 64;

  void validate() const;
  // Feature channels of the synthesis block producing `size` x `size` maps.
  int channels_at(int size) const;
  bool operator==(const GeneratorSpec&) const = default;
};

struct DiscriminatorSpec {
  int base_channels = 64;
  int resolution = 64;

  void validate() const;
  int channels_at(int size) const;
  bool operator==(const DiscriminatorSpec&) const = default;
};

struct EncoderSpec {
  int latent_dim = 64;
  int conv_blocks = 4;
  int base_channels = 16;
  int hidden = 256;

  void validate() const;
  bool operator==(const EncoderSpec&) const = default;
};

struct ClassifierSpec {
  int conv_blocks = 4;
  int base_channels = 8;
  int n_outputs = 1;

  void validate() const;
  // Names of the residual blocks usable as GradCAM layers, input to output.
  std::vector<std::string> layer_names() const;
  bool operator==(const ClassifierSpec&) const = default;
};

nlohmann::json to_json(const GeneratorSpec& s);
nlohmann::json to_json(const DiscriminatorSpec& s);
nlohmann::json to_json(const EncoderSpec& s);
nlohmann::json to_json(const ClassifierSpec& s);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);
DiscriminatorSpec discriminator_spec_from_json(const nlohmann::json& j);
EncoderSpec encoder_spec_from_json(const nlohmann::json& j);
ClassifierSpec classifier_spec_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Parameters

struct Array {
  std::vector<std::int64_t> shape;
  std::vector<float> data;

  std::int64_t numel() const;
  bool operator==(const Array&) const = default;
};

// Flat named arrays keyed by layer path ("blocks.0.conv.weight").
struct NetworkParams {
  std::string kind;  // mapping | synthesis | discriminator | encoder | classifier | optimizer state
  nlohmann::json spec;
  std::map<std::string, Array> arrays;
  std::uint64_t init_seed = 0;

  std::int64_t parameter_count() const;
  bool operator==(const NetworkParams& o) const {
    return kind == o.kind && spec == o.spec && arrays == o.arrays && init_seed == o.init_seed;
  }
};

// One little-endian float32 file per array (magic, rank, int64 dims, data)
// plus manifest.json with the spec, seed and per-file SHA-256.
void save_params(const NetworkParams& params, const std::filesystem::path& dir);
// Throws DigestError on missing, truncated or altered array files.
NetworkParams load_params(const std::filesystem::path& dir);
// Digest over kind, spec, seed and every array's shape and bytes.
std::string params_digest(const NetworkParams& params);

// ---------------------------------------------------------------------------
// Modules

struct MappingNetImpl : torch::nn::Module {
  explicit MappingNetImpl(const GeneratorSpec& spec);
  torch::Tensor forward(torch::Tensor z);

  GeneratorSpec spec;
  torch::nn::ModuleList layers{nullptr};
};
TORCH_MODULE(MappingNet);

struct StyledConvImpl : torch::nn::Module {
  StyledConvImpl(int in_channels, int out_channels, int latent_dim);
  torch::Tensor forward(torch::Tensor x, const torch::Tensor& w);

  torch::nn::Conv2d conv{nullptr};
  torch::nn::Linear style{nullptr};
};
TORCH_MODULE(StyledConv);

struct SynthesisNetImpl : torch::nn::Module {
  explicit SynthesisNetImpl(const GeneratorSpec& spec);
  // w: [B, latent_dim] -> images [B, 1, R, R] in [-1, 1].
  torch::Tensor forward(const torch::Tensor& w);

  GeneratorSpec spec;
  torch::Tensor constant;
  torch::nn::ModuleList blocks{nullptr};
  torch::nn::Conv2d to_gray{nullptr};
};
TORCH_MODULE(SynthesisNet);

struct DiscriminatorImpl : torch::nn::Module {
  explicit DiscriminatorImpl(const DiscriminatorSpec& spec);
  torch::Tensor forward(torch::Tensor x);  // [B, 1] logits

  DiscriminatorSpec spec;
  torch::nn::Conv2d from_gray{nullptr};
  torch::nn::ModuleList blocks{nullptr};
  torch::nn::Conv2d final_conv{nullptr};
  torch::nn::Linear fc{nullptr};
  torch::nn::Linear out{nullptr};
};
TORCH_MODULE(Discriminator);

struct EncoderImpl : torch::nn::Module {
  explicit EncoderImpl(const EncoderSpec& spec);
  torch::Tensor forward(torch::Tensor x);  // [B, latent_dim]

  EncoderSpec spec;
  torch::nn::ModuleList blocks{nullptr};
  torch::nn::Linear fc{nullptr};
  torch::nn::Linear out{nullptr};
};
TORCH_MODULE(Encoder);

struct ResidualBlockImpl : torch::nn::Module {
  ResidualBlockImpl(int in_channels, int out_channels, bool downsample);
  torch::Tensor forward(torch::Tensor x);

  bool downsample;
  torch::nn::Conv2d conv_a{nullptr};
  torch::nn::Conv2d conv_b{nullptr};
  torch::nn::Conv2d skip{nullptr};
};
TORCH_MODULE(ResidualBlock);

struct ClassifierImpl : torch::nn::Module {
  explicit ClassifierImpl(const ClassifierSpec& spec);
  torch::Tensor forward(torch::Tensor x);  // [B, 1] logits
  // Logits plus the output of the named residual block. LayerLookupError on unknown names.
  std::pair<torch::Tensor, torch::Tensor> forward_with_features(torch::Tensor x, const std::string& layer);

  ClassifierSpec spec;
  torch::nn::Conv2d stem{nullptr};
  torch::nn::ModuleList blocks{nullptr};
  torch::nn::Linear head{nullptr};
};
TORCH_MODULE(Classifier);

// Deterministic initialisation from a local generator; parameters are visited
// in name order so the result depends only on (architecture, seed).
void init_params(torch::nn::Module& module, std::uint64_t seed);

NetworkParams export_params(const torch::nn::Module& module, std::string kind, nlohmann::json spec,
                            std::uint64_t init_seed);
// Copies arrays into the module; ShapeError unless names and shapes match exactly.
void import_params(torch::nn::Module& module, const NetworkParams& params);

MappingNet make_mapping(const NetworkParams& params);
SynthesisNet make_synthesis(const NetworkParams& params);
Discriminator make_discriminator(const NetworkParams& params);
Encoder make_encoder(const NetworkParams& params);
Classifier make_classifier(const NetworkParams& params);

// ---------------------------------------------------------------------------
// Single-sample inference

torch::Tensor image_to_tensor(const Image& image);   // [1, 1, R, R]
Image tensor_to_image(const torch::Tensor& tensor);  // accepts [R, R], [1, R, R] or [1, 1, R, R]
torch::Tensor latent_to_tensor(const LatentVector& w);  // [1, d]

LatentVector mapping_forward(MappingNet& net, std::span<const float> z);
std::vector<LatentVector> mapping_forward(MappingNet& net, const std::vector<std::vector<float>>& zs);
Image synthesis_forward(SynthesisNet& net, const LatentVector& w);
LatentVector encoder_forward(Encoder& net, const Image& image);
double classifier_logit(Classifier& net, const Image& image);
double classifier_forward(Classifier& net, const Image& image);  // probability in (0, 1)
double discriminator_forward(Discriminator& net, const Image& image);

}  // namespace lcx::nets
