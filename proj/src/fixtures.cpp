#include "hyperlattice/fixtures.hpp"

namespace hyperlattice {

std::optional<std::string> embedded_text(const std::string& key) {
  const auto& files = detail::embedded_files();
  auto it = files.find(key);
  if (it == files.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> embedded_keys(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::embedded_files())
    if (k.rfind(prefix, 0) == 0) out.push_back(k);
  return out;
}

std::optional<IntMatrix> published_fusion_matrix(const std::string& name) {
  auto text = embedded_text("fusion/" + name);
  if (!text) return std::nullopt;
  return parse_matrix_text(*text);
}

std::optional<IntMatrix> published_gram(const std::string& key) {
  auto text = embedded_text("gram/" + key);
  if (!text) return std::nullopt;
  return parse_matrix_text(*text);
}

}  // namespace hyperlattice
