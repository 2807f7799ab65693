#pragma once

#include <json.hpp>
#include <string>

#include "hyperlattice/enumerate.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/matrix.hpp"
#include "hyperlattice/ribbon.hpp"

namespace hyperlattice {

using json = nlohmann::json;

std::string to_decimal(const BigInt& v);
// "2^12 * 3^12"; trial division, any leftover cofactor printed as is.
std::string factor_string(const BigInt& v);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json gram_to_json(const std::string& system, const OrderedBasis& basis, const IntMatrix& gram);
json invariants_to_json(const std::string& system, const LatticeInvariants& inv);
json theta_to_json(const std::string& system, const ThetaSeries& t);
ThetaSeries theta_from_json(const json& j);
json shells_to_json(const std::string& system, const std::vector<Shell>& shells);

}  // namespace hyperlattice
