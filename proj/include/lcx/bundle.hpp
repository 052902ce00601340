#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lcx/latent.hpp"
#include "lcx/nets.hpp"

namespace lcx {

inline constexpr const char* kBundleFormat = "lcx-bundle/1";

// G (mapping + synthesis), E, f and the latent direction as one unit.
// `metadata` carries specs, stage digests and seeds; it holds no timestamps so
// identical runs give identical bundles.
struct ModelBundle {
  nets::NetworkParams mapping;
  nets::NetworkParams synthesis;
  nets::NetworkParams encoder;
  nets::NetworkParams classifier;
  latent::LatentDirection direction;
  nlohmann::json metadata = nlohmann::json::object();

  int latent_dim() const;
  int resolution() const;
  // ContractError when member dimensions disagree.
  void validate() const;
  // Over the format tag, metadata, member params digests and the direction.
  std::string digest() const;
  latent::Models instantiate() const;
};

// <dir>/{mapping,synthesis,encoder,classifier}/, direction.json, bundle.json.
void save_bundle(const ModelBundle& bundle, const std::filesystem::path& dir);
// DigestError on missing, truncated or altered files; FormatError on an unknown format tag.
ModelBundle load_bundle(const std::filesystem::path& dir);

}  // namespace lcx
