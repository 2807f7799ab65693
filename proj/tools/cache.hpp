#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "hyperlattice/serialize.hpp"

namespace hyperlattice::cli {

// One JSON file per (system, basis, kind). Each file stores the config that
// produced it and a checksum over config and payload; anything that does not
// match is recomputed and overwritten.
class ResultCache {
 public:
  ResultCache() = default;  // disabled
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path(const std::string& system, const std::string& basis, const std::string& kind) const;

  std::optional<json> load(const std::string& system, const std::string& basis, const std::string& kind,
                           const json& config) const;
  void store(const std::string& system, const std::string& basis, const std::string& kind, const json& config,
             const json& payload) const;

  // Cached payload when valid, otherwise compute() and store.
  json get_or_compute(const std::string& system, const std::string& basis, const std::string& kind,
                      const json& config, const std::function<json()>& compute) const;

  // Set by load() when a file existed but failed validation.
  mutable std::string last_rejection;

 private:
  std::filesystem::path dir_;
};

std::string checksum(const json& config, const json& payload);

// --cache-dir, else HYPERLATTICE_CACHE, else $XDG_CACHE_HOME/hyperlattice or
// ~/.cache/hyperlattice.
std::filesystem::path default_cache_dir(const std::string& flag);

}  // namespace hyperlattice::cli
