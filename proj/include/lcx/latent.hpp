#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcx/image.hpp"
#include "lcx/nets.hpp"

namespace lcx::latent {

struct LatentDataset {
  std::vector<nets::LatentVector> latents;  // n rows of dimension d
  std::vector<double> soft_labels;          // f(G(w)), in (0, 1)
  std::vector<int> hard_labels;             // soft > 0.5
  std::uint64_t seed = 0;

  std::size_t size() const { return latents.size(); }
  std::size_t dim() const { return latents.empty() ? 0 : latents.front().size(); }
};

struct LatentDirection {
  std::vector<double> alpha;
  double beta = 0.0;
  std::vector<double> alpha_unit;
  double projection_std = 0.0;  // population std of alpha_unit . w over the training latents
  double train_auc = 0.0;
  double l2_strength = 0.0;
  bool soft_targets = false;

  std::size_t dim() const { return alpha.size(); }
  bool operator==(const LatentDirection&) const = default;
};

nlohmann::json to_json(const LatentDirection& d);
LatentDirection direction_from_json(const nlohmann::json& j);

// z ~ N(0, I) from one seeded stream, w = mapping(z), soft label f(G(w)).
// ContractError when n < 2d.
LatentDataset sample_latent_dataset(nets::MappingNet& mapping, nets::SynthesisNet& synthesis,
                                    nets::Classifier& classifier, int n, std::uint64_t seed);

struct FitOptions {
  std::optional<double> l2_strength;  // default 1/n
  bool soft_targets = false;
  int max_iterations = 200;
};

// Regularised logistic regression (penalty l2/2 ||alpha||^2, beta free) fitted
// by damped Newton in double precision.
LatentDirection fit_direction(const LatentDataset& data, const FitOptions& options = {});

// sum_i BCE(sigma(alpha.w_i + beta), t_i) + l2/2 ||alpha||^2 with t the hard
// labels (or soft labels when soft_targets); exposed for oracle tests.
double regularized_loss(const LatentDataset& data, std::span<const double> alpha, double beta, double l2,
                        bool soft_targets = false);

double sigmoid(double s);
double latent_logit(const LatentDirection& d, std::span<const double> w);
double latent_predict(const LatentDirection& d, std::span<const double> w);
double latent_predict(const LatentDirection& d, const nets::LatentVector& w);

// The default grid: 11 values from -2.5 to 2.5.
std::vector<double> default_lambdas();
// ContractError unless finite, strictly increasing and containing 0.
void validate_lambdas(std::span<const double> lambdas);

struct Frame {
  double lambda = 0.0;
  nets::LatentVector latent;
  Image image;
  double latent_score = 0.0;  // f~ of the frame latent
  double image_score = 0.0;   // f of the frame image
  std::optional<double> gap_estimate;
};

struct TraversalSeries {
  std::string input_id;
  nets::LatentVector base_latent;
  std::vector<double> lambdas;
  std::vector<Frame> frames;
};

struct TraverseOptions {
  bool gap_oracle = true;
  bool raw_alpha = false;  // step along alpha itself instead of projection_std * alpha_unit
};

// One frame at an arbitrary lambda; lambda = 0 renders w itself.
Frame render_frame(nets::SynthesisNet& synthesis, const LatentDirection& direction, const nets::LatentVector& w,
                   double lambda, nets::Classifier& classifier, const TraverseOptions& options = {});

// Frame k shows G(w + lambda_k * projection_std * alpha_unit). The lambda = 0
// frame is rendered from w itself.
TraversalSeries traverse(nets::SynthesisNet& synthesis, const LatentDirection& direction, const nets::LatentVector& w,
                         std::span<const double> lambdas, nets::Classifier& classifier,
                         const TraverseOptions& options = {});

struct Models {
  nets::MappingNet mapping{nullptr};
  nets::SynthesisNet synthesis{nullptr};
  nets::Encoder encoder{nullptr};
  nets::Classifier classifier{nullptr};
  LatentDirection direction;
};

struct Explanation {
  TraversalSeries series;
  Image reconstruction;
  double reconstruction_psnr = 0.0;
  double input_score = 0.0;           // f(x)
  double reconstruction_score = 0.0;  // f(G(E(x)))
  double prediction_drift = 0.0;      // |f(x) - f(G(E(x)))|
};

// w = E(x), then traverse. ShapeError when x does not match the generator resolution.
Explanation explain(Models& models, const Image& image, std::span<const double> lambdas,
                    const TraverseOptions& options = {}, std::string input_id = "input");

// Frame PNGs plus series.json.
void export_series(const Explanation& explanation, const std::filesystem::path& dir, const std::string& bundle_digest);
nlohmann::json series_sidecar(const Explanation& explanation, const std::string& bundle_digest);

}  // namespace lcx::latent
