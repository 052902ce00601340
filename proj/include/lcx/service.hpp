#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lcx/bundle.hpp"
#include "lcx/image.hpp"
#include "lcx/latent.hpp"

namespace httplib {
class Server;
}

namespace lcx::service {

struct CatalogEntry {
  std::string id;
  int label = 0;
  std::filesystem::path path;
  Image image;
};

// Test split of an exported dataset directory, ids "test_000000", ...
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dataset_dir, int limit = -1);

struct ServiceOptions {
  std::size_t cache_bytes = 64u << 20;
  bool strict_lambdas = false;  // 422 unless the grid is sorted, duplicate-free and contains 0
  std::size_t max_body_bytes = 4u << 20;
  std::size_t max_lambdas = 256;
};

// Lambdas are quantized to 1e-3 before rendering, so cache hits and misses
// produce identical bytes.
double quantize_lambda(double lambda);

struct CachedFrame {
  std::string png;
  double latent_score = 0.0;
  double image_score = 0.0;
  std::optional<double> gap_estimate;
};

// LRU over rendered frames with a byte budget; safe under concurrent use.
class FrameCache {
 public:
  explicit FrameCache(std::size_t capacity_bytes) : capacity_(capacity_bytes) {}
  std::optional<CachedFrame> get(const std::string& key);
  void put(const std::string& key, CachedFrame frame);
  std::size_t bytes() const;
  std::size_t entries() const;

 private:
  static std::size_t cost(const std::string& key, const CachedFrame& f) { return key.size() + f.png.size() + 64; }

  mutable std::mutex mutex_;
  std::size_t capacity_;
  std::size_t bytes_ = 0;
  std::list<std::pair<std::string, CachedFrame>> order_;  // front = most recent
  std::unordered_map<std::string, std::list<std::pair<std::string, CachedFrame>>::iterator> index_;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class Service {
 public:
  Service(ModelBundle bundle, std::vector<CatalogEntry> catalog, ServiceOptions options = {});

  const std::string& bundle_digest() const { return digest_; }

  Response meta() const;
  Response images() const;
  Response image_png(const std::string& id) const;
  Response encode(const std::string& body);
  Response traverse(const std::string& body);
  Response gradcam(const std::string& body);
  Response strip(const std::string& body);

  // Routes plus CORS headers and the payload limit.
  void mount(httplib::Server& server);

  const FrameCache& cache() const { return cache_; }

 private:
  struct Input {
    std::string id;  // empty for uploaded images
    Image image;
    nets::LatentVector latent;
  };

  Response error(int status, const std::string& message) const;
  Response ok(nlohmann::json body) const;
  std::optional<Response> parse(const std::string& body, nlohmann::json& out) const;
  // Resolves image_id or png_base64; sets `failure` on error.
  std::optional<Input> resolve(const nlohmann::json& request, Response& failure);
  CachedFrame frame(const Input& input, double lambda_q, bool gap_oracle);

  ModelBundle bundle_;
  latent::Models models_;
  std::string digest_;
  ServiceOptions options_;
  std::vector<CatalogEntry> catalog_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::vector<nets::LatentVector> latents_;
  std::vector<double> f_scores_;
  FrameCache cache_;
  std::mutex compute_;  // serialises model evaluation
};

std::string base64_encode(const std::string& bytes);
// nullopt on malformed input.
std::optional<std::string> base64_decode(const std::string& text);

}  // namespace lcx::service
