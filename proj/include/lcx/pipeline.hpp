#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcx/bundle.hpp"
#include "lcx/nets.hpp"
#include "lcx/training.hpp"

namespace lcx::pipeline {

struct DatasetConfig {
  int n_train = 1000;
  int n_val = 200;
  int n_test = 200;
  int resolution = 64;
};

struct DirectionConfig {
  int n_samples = 5000;
  int test_samples = 1000;
  std::optional<double> l2_strength;  // default 1/n
  bool soft_targets = false;
};

struct ReportConfig {
  std::vector<double> lambdas;  // default grid when empty in JSON
  int n_explain = 50;
  bool raw_alpha = false;
  int gradcam_margin = -1;  // rows added around the gap band; negative: resolution / 32
  int n_strips = 4;
};

struct PipelineConfig {
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "lcx-out";
  DatasetConfig dataset;
  nets::GeneratorSpec generator;
  nets::DiscriminatorSpec discriminator;
  train::TrainConfig gan_train;
  nets::EncoderSpec encoder;
  train::TrainConfig encoder_train;
  nets::ClassifierSpec classifier;
  train::TrainConfig classifier_train;
  DirectionConfig direction;
  ReportConfig report;
};

// Strict schema: unknown keys and wrong types raise ConfigError naming the
// JSON path (e.g. "gan_train.steps"). Missing keys keep defaults.
PipelineConfig config_from_json(const nlohmann::json& j);
PipelineConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const PipelineConfig& c);

enum class Stage { data, gan, encoder, classifier, direction, report };
inline constexpr Stage kAllStages[] = {Stage::data,       Stage::gan,       Stage::encoder,
                                       Stage::classifier, Stage::direction, Stage::report};
std::string stage_name(Stage s);
Stage stage_from_name(const std::string& name);
std::vector<Stage> upstream(Stage s);

// Per-stage seed derived from the global seed.
std::uint64_t stage_seed(const PipelineConfig& c, Stage s);
// Covers the stage's config subset, its seed and the digests of its upstream stages.
std::string stage_digest(const PipelineConfig& c, Stage s);
std::filesystem::path stage_dir(const PipelineConfig& c, Stage s);
std::filesystem::path bundle_dir(const PipelineConfig& c);

enum class StageOutcome { ran, skipped };

struct RunOptions {
  bool force = false;
  std::function<void(const std::string&)> log;
};

// Runs one stage. DependencyError when an upstream stage has not completed;
// StaleArtifactError when it completed under a different config.
StageOutcome run_stage(const PipelineConfig& c, Stage s, const RunOptions& options = {});

// Exclusive ownership of an output directory for the lifetime of the object.
class DirectoryLock {
 public:
  explicit DirectoryLock(const std::filesystem::path& dir);
  ~DirectoryLock();
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  std::filesystem::path path_;
};

// Completed-stage record (stage.json); nullopt when absent.
std::optional<nlohmann::json> stage_record(const PipelineConfig& c, Stage s);

synth::DatasetSplit load_stage_dataset(const PipelineConfig& c);

}  // namespace lcx::pipeline
