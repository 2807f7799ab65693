#include "hyperlattice/serialize.hpp"

namespace hyperlattice {

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string factor_string(const BigInt& value) {
  if (value <= 1) return to_decimal(value);
  BigInt v = value;
  std::string out;
  auto emit = [&](const std::string& s) { out += (out.empty() ? "" : " * ") + s; };
  for (long p = 2; p < 10000 && v > 1; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e == 1) emit(std::to_string(p));
    if (e > 1) emit(std::to_string(p) + "^" + std::to_string(e));
  }
  if (v > 1) emit(to_decimal(v));
  return out;
}

json matrix_to_json(const IntMatrix& m) { return json(m.to_rows()); }

IntMatrix matrix_from_json(const json& j) { return IntMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>()); }

json gram_to_json(const std::string& system, const OrderedBasis& basis, const IntMatrix& gram) {
  json elems = json::array();
  for (const auto& p : basis.elements) elems.push_back({{"position", {p.m1, p.m2}}, {"vertex", p.vertex}});
  return {{"name", system}, {"basis", to_string(basis.label)}, {"elements", elems}, {"gram", matrix_to_json(gram)}};
}

json invariants_to_json(const std::string& system, const LatticeInvariants& inv) {
  json dq = json::array();
  for (const auto& d : inv.dual_quotient) dq.push_back(to_decimal(d));
  json lp = json::array();
  for (const auto& [p, s] : inv.legendre_profile) lp.push_back({p, s});
  return {{"name", system},
          {"rank", inv.rank},
          {"discriminant", to_decimal(inv.discriminant)},
          {"discriminant_factored", factor_string(inv.discriminant)},
          {"level", to_decimal(inv.level)},
          {"weight", inv.weight},
          {"dual_quotient", dq},
          {"legendre_profile", lp}};
}

json theta_to_json(const std::string& system, const ThetaSeries& t) {
  json coeffs = json::array();
  for (const auto& [n, c] : t.nonzero()) coeffs.push_back({n, c});
  return {{"name", system}, {"convention", "q-exponent = xAx"}, {"max_norm", t.max_norm}, {"coefficients", coeffs}};
}

ThetaSeries theta_from_json(const json& j) {
  ThetaSeries t;
  t.max_norm = j.at("max_norm").get<int>();
  t.counts.assign(std::size_t(t.max_norm) + 1, 0);
  for (const auto& c : j.at("coefficients")) {
    int n = c.at(0).get<int>();
    if (n < 0 || n > t.max_norm) throw std::runtime_error("theta coefficient outside max_norm");
    t.counts[n] = c.at(1).get<std::uint64_t>();
  }
  return t;
}

json shells_to_json(const std::string& system, const std::vector<Shell>& shells) {
  json arr = json::array();
  for (const auto& s : shells) arr.push_back({{"norm", s.norm}, {"count", 2 * s.vectors.size()}, {"vectors", s.vectors}});
  return {{"name", system}, {"sign_convention", "first nonzero coordinate positive"}, {"shells", arr}};
}

}  // namespace hyperlattice
