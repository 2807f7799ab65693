#include "cache.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hyperlattice::cli {

namespace fs = std::filesystem;

namespace {

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
  return out;
}

}  // namespace

std::string checksum(const json& config, const json& payload) {
  // 64-bit FNV-1a over the canonical dumps.
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(config.dump());
  feed("\n");
  feed(payload.dump());
  std::ostringstream o;
  o << std::hex << h;
  return o.str();
}

fs::path ResultCache::path(const std::string& system, const std::string& basis, const std::string& kind) const {
  return dir_ / (sanitize(system) + "_" + sanitize(basis) + "_" + sanitize(kind) + ".json");
}

std::optional<json> ResultCache::load(const std::string& system, const std::string& basis, const std::string& kind,
                                      const json& config) const {
  last_rejection.clear();
  if (!enabled()) return std::nullopt;
  const auto p = path(system, basis, kind);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  json doc;
  try {
    in >> doc;
  } catch (const std::exception&) {
    last_rejection = "unreadable cache file " + p.string();
    return std::nullopt;
  }
  if (!doc.is_object() || !doc.contains("config") || !doc.contains("checksum") || !doc.contains("payload")) {
    last_rejection = "malformed cache file " + p.string();
    return std::nullopt;
  }
  if (doc["config"] != config) {
    last_rejection = "cache file " + p.string() + " holds a different configuration";
    return std::nullopt;
  }
  if (!doc["checksum"].is_string() || doc["checksum"].get<std::string>() != checksum(doc["config"], doc["payload"])) {
    last_rejection = "checksum mismatch in " + p.string();
    return std::nullopt;
  }
  return doc["payload"];
}

void ResultCache::store(const std::string& system, const std::string& basis, const std::string& kind,
                        const json& config, const json& payload) const {
  if (!enabled()) return;
  fs::create_directories(dir_);
  const auto p = path(system, basis, kind);
  const auto tmp = fs::path(p.string() + ".tmp");
  {
    std::ofstream out(tmp);
    out << json{{"config", config}, {"checksum", checksum(config, payload)}, {"payload", payload}}.dump(1) << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, p);
}

json ResultCache::get_or_compute(const std::string& system, const std::string& basis, const std::string& kind,
                                 const json& config, const std::function<json()>& compute) const {
  if (auto hit = load(system, basis, kind, config)) return *hit;
  json payload = compute();
  store(system, basis, kind, config, payload);
  return payload;
}

fs::path default_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("HYPERLATTICE_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hyperlattice";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hyperlattice";
  return fs::path(".hyperlattice-cache");
}

}  // namespace hyperlattice::cli
