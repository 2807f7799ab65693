#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlattice/matrix.hpp"

namespace hyperlattice {

namespace detail {
const std::map<std::string, std::string>& embedded_files();
}

// Raw text of an embedded data file, e.g. "fusion/A2" or "gram/L1_A".
std::optional<std::string> embedded_text(const std::string& key);
std::vector<std::string> embedded_keys(const std::string& prefix);

// Fundamental fusion matrix as printed, for A1..A5, D3, D6, E5, E9, E21.
std::optional<IntMatrix> published_fusion_matrix(const std::string& name);

// Published Gram matrices: L1_A, L1_Aprime, L1_Asecond, L1_table (16x16),
// L2, L3, D3, D6, E5, E9, E21.
std::optional<IntMatrix> published_gram(const std::string& key);

}  // namespace hyperlattice
