#include "hyperlattice/golden.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "hyperlattice/errors.hpp"
#include "hyperlattice/fixtures.hpp"
#include "hyperlattice/fusion.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/qseries.hpp"
#include "hyperlattice/ribbon.hpp"
#include "hyperlattice/serialize.hpp"

namespace hyperlattice {

namespace {

CheckOutcome pass(std::string detail = {}) { return {Outcome::Pass, std::move(detail)}; }
CheckOutcome mismatch(std::string detail) { return {Outcome::Mismatch, std::move(detail)}; }
CheckOutcome expect(bool ok, std::string detail) { return {ok ? Outcome::Pass : Outcome::Mismatch, std::move(detail)}; }

std::string with_count(std::uint64_t v) {
  std::ostringstream s;
  if (v >= 10'000'000)
    s << double(v) / 1e6 << "M";
  else
    s << v;
  return s.str();
}

// Tables and Gram matrices are shared between checks of one run.
class Cache {
 public:
  const FusionTable& table(const std::string& name) {
    auto it = tables_.find(name);
    if (it == tables_.end()) it = tables_.emplace(name, std::make_unique<FusionTable>(load_fusion_system(name))).first;
    return *it->second;
  }
  const HyperRootCoordinates& coords(const std::string& name, BasisLabel label = BasisLabel::B1) {
    auto key = name + "/" + to_string(label);
    auto it = coords_.find(key);
    if (it == coords_.end()) {
      const auto& t = table(name);
      it = coords_.emplace(key, std::make_unique<HyperRootCoordinates>(t, select_basis(t, label))).first;
    }
    return *it->second;
  }
  const IntMatrix& gram(const std::string& name, BasisLabel label = BasisLabel::B1) {
    return coords(name, label).gram();
  }

 private:
  std::map<std::string, std::unique_ptr<FusionTable>> tables_;
  std::map<std::string, std::unique_ptr<HyperRootCoordinates>> coords_;
};

Cache& cache() {
  static Cache c;
  return c;
}

std::string display_name(const std::string& system) {
  if (system.size() == 2 && system[0] == 'A') return std::string("L") + system[1];
  return system;
}

// First few differing exponents between two coefficient lists.
std::string series_diff(const std::vector<BigInt>& computed, const QSeries& printed, int upto) {
  std::ostringstream s;
  int shown = 0;
  for (int e = 0; e <= upto && shown < 4; ++e) {
    BigInt c = e < int(computed.size()) ? computed[e] : BigInt(0);
    if (c != printed.coefficient(e)) {
      s << (shown ? "; " : "") << "q^" << e << ": computed " << c << ", printed " << printed.coefficient(e);
      ++shown;
    }
  }
  return s.str();
}

std::vector<BigInt> as_big(const ThetaSeries& t) {
  std::vector<BigInt> v;
  for (auto c : t.counts) v.push_back(BigInt(c));
  return v;
}

CheckOutcome theta_against(const std::string& system, const std::string& fixture, int upto,
                           const SuiteOptions& opts) {
  const QSeries printed = reference_series(fixture);
  if (printed.truncation() < upto) return mismatch("printed series only reaches q^" + std::to_string(printed.truncation()));
  const ThetaSeries t = theta_series(cache().gram(system), upto, opts.enumeration);
  const auto diff = series_diff(as_big(t), printed, upto);
  if (!diff.empty()) return mismatch(diff);
  return pass(std::to_string(t.nonzero().size()) + " nonzero coefficients to q^" + std::to_string(upto) + ", " +
              with_count(t.nodes) + " nodes");
}

struct ShippedLattice {
  std::string system;
  int base;
  unsigned exponent;
  std::string level;  // printed level, empty when none is printed
};

const std::vector<ShippedLattice>& shipped_lattices() {
  static const std::vector<ShippedLattice> v = {
      {"A0", 3, 3, ""},  {"A1", 4, 6, "16"},  {"A2", 5, 9, "25"},  {"A3", 6, 12, "18"},
      {"A4", 7, 15, "49"}, {"D3", 3, 12, "18"}, {"D6", 3, 18, "54"}, {"E5", 2, 30, "16"},
      {"E9", 2, 24, "16"}, {"E21", 3, 12, "6"},
  };
  return v;
}

const std::map<std::string, std::string>& level_discrepancies() {
  static const std::map<std::string, std::string> m = {
      {"D3", "printed as 2x9; 9 is already minimal with 9*A^-1 even integral, also for the printed Gram matrix"},
      {"D6", "printed as 2x27; 27 is already minimal with 27*A^-1 even integral, also for the printed Gram matrix"},
      {"E9", "printed as 2x8; 8 is already minimal with 8*A^-1 even integral, also for the printed Gram matrix"},
      {"E21", "printed as 2x3; 3 is already minimal with 3*A^-1 even integral, also for the printed Gram matrix"},
  };
  return m;
}

struct ThetaTarget {
  std::string system;
  std::string fixture;
  int quick;
  int full;
};

const std::vector<ThetaTarget>& theta_targets() {
  static const std::vector<ThetaTarget> v = {
      {"A1", "theta_L1", 46, 46}, {"A2", "theta_L2", 96, 96}, {"A3", "theta_L3", 24, 60},
      {"A4", "theta_L4", 20, 30}, {"A5", "theta_L5", 12, 16}, {"A6", "theta_L6", 10, 12},
      {"D3", "theta_D3", 20, 20}, {"D6", "theta_D6", 12, 20}, {"E5", "theta_E5", 16, 20},
      {"E9", "theta_E9", 16, 20}, {"E21", "theta_E21", 6, 8},
  };
  return v;
}

// B1/B3 comparison length per system; E21 stops at its first two shells.
int basis_compare_norm(const std::string& system, Scope scope) {
  if (system == "E21") return 6;
  if (system == "A6" && scope == Scope::Quick) return 10;
  return 12;
}

// Unimodular change of basis from B1 to another labelled basis, then equal
// theta prefixes.
CheckOutcome basis_agreement(const std::string& system, BasisLabel label, int upto, const SuiteOptions& o) {
  const auto& c1 = cache().coords(system, BasisLabel::B1);
  const auto& c2 = cache().coords(system, label);
  const int n = c1.gram().rows();
  IntMatrix change(n, n);
  for (int j = 0; j < n; ++j) {
    const auto x = c1.express(c2.basis().elements[j]);
    for (int i = 0; i < n; ++i) change(i, j) = x[i];
  }
  const BigInt d = determinant(change);
  if (d != 1 && d != -1) return mismatch("change of basis has determinant " + to_decimal(d));
  if (!(change.transpose() * c1.gram() * change == c2.gram()))
    return mismatch("change of basis does not carry the B1 Gram to the " + to_string(label) + " Gram");
  const auto t1 = theta_series(c1.gram(), upto, o.enumeration);
  const auto t2 = theta_series(c2.gram(), upto, o.enumeration);
  if (!(t1 == t2)) return mismatch("theta prefixes differ");
  return pass("unimodular change of basis; theta equal to q^" + std::to_string(upto));
}

// The B3 positions do not span the lattice for these systems.
std::string b3_discrepancy(const std::string& system) {
  if (system == "D3") return "B3 spans an index-3 sublattice (det 3^14 against 3^12)";
  for (const char* s : {"A1", "A3", "A5", "E5", "E9"})
    if (system == s) return "B3 hyper-roots are linearly dependent, Gram determinant 0";
  return "";
}

void add_gram_checks(std::vector<GoldenCheck>& out) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"A1", "L1_A"}, {"A1", "L1_Aprime"}, {"A1", "L1_Asecond"}, {"A2", "L2"}, {"A3", "L3"},
      {"D3", "D3"},   {"D6", "D6"},        {"E5", "E5"},         {"E9", "E9"}, {"E21", "E21"},
  };
  for (const auto& [system, key] : pairs) {
    out.push_back({1, "Gram " + display_name(system) + " B1 ~ printed " + key, "", [system, key](const SuiteOptions&) {
                     const auto printed = published_gram(key);
                     if (!printed) return mismatch("no embedded matrix " + key);
                     const auto r = signed_perm_equivalent(cache().gram(system), *printed);
                     if (r.status == Equivalence::Equivalent)
                       return pass("witness found after " + std::to_string(r.nodes) + " search nodes");
                     return mismatch(r.status == Equivalence::NotEquivalent ? "no signed permutation exists"
                                                                            : "search budget exhausted");
                   }});
  }
  out.push_back({1, "Gram L1: A, A', A'' pairwise equivalent", "", [](const SuiteOptions&) {
                   const char* keys[] = {"L1_A", "L1_Aprime", "L1_Asecond"};
                   for (int i = 0; i < 3; ++i)
                     for (int j = i + 1; j < 3; ++j) {
                       auto r = signed_perm_equivalent(*published_gram(keys[i]), *published_gram(keys[j]));
                       if (r.status != Equivalence::Equivalent)
                         return mismatch(std::string(keys[i]) + " vs " + keys[j] + " not matched");
                     }
                   return pass("3 witnesses");
                 }});
}

void add_invariant_checks(std::vector<GoldenCheck>& out) {
  for (const auto& lat : shipped_lattices()) {
    out.push_back({2, "det " + display_name(lat.system) + " = " + std::to_string(lat.base) + "^" + std::to_string(lat.exponent),
                   "", [lat](const SuiteOptions&) {
                     const BigInt d = determinant(cache().gram(lat.system));
                     return expect(d == boost::multiprecision::pow(BigInt(lat.base), lat.exponent),
                                   "computed " + to_decimal(d) + " = " + factor_string(d));
                   }});
    if (lat.level.empty()) continue;
    auto it = level_discrepancies().find(lat.system);
    out.push_back({2, "level " + display_name(lat.system) + " = " + lat.level,
                   it == level_discrepancies().end() ? "" : it->second, [lat](const SuiteOptions&) {
                     const BigInt l = modular_level(cache().gram(lat.system));
                     return expect(to_decimal(l) == lat.level, "computed " + to_decimal(l));
                   }});
  }
  out.push_back({3, "Smith form of L1 = (2,4,4,4,4,8)", "", [](const SuiteOptions&) {
                   const auto inv = invariants(cache().gram("A1"));
                   std::string s;
                   for (const auto& f : inv.dual_quotient) s += (s.empty() ? "" : ",") + to_decimal(f);
                   return expect(s == "2,4,4,4,4,8", "computed (" + s + ")");
                 }});
  out.push_back({3, "Smith form of L1/2 = (2,2,2,2,4)", "", [](const SuiteOptions&) {
                   IntMatrix g = cache().gram("A1");
                   for (int i = 0; i < g.rows(); ++i)
                     for (int j = 0; j < g.cols(); ++j) {
                       if (g(i, j) % 2) return mismatch("Gram matrix not divisible by 2");
                       g(i, j) /= 2;
                     }
                   std::string s;
                   for (const auto& f : smith_diagonal(g))
                     if (f > 1) s += (s.empty() ? "" : ",") + to_decimal(f);
                   return expect(s == "2,2,2,2,4", "computed (" + s + ")");
                 }});
}

void add_theta_checks(std::vector<GoldenCheck>& out, Scope scope) {
  out.push_back({4, "theta L0 = hexagonal(q^3), all printed terms", "", [](const SuiteOptions& o) {
                   const QSeries hex = reference_series("hexagonal").substitute(3);
                   const int upto = hex.truncation();
                   const ThetaSeries t = theta_series(cache().gram("A0"), upto, o.enumeration);
                   const auto diff = series_diff(as_big(t), hex, upto);
                   if (!diff.empty()) return mismatch(diff);
                   return pass("exact to q^" + std::to_string(upto));
                 }});
  for (const auto& target : theta_targets()) {
    const int upto = scope == Scope::Quick ? target.quick : target.full;
    out.push_back({4, "theta " + display_name(target.system) + " to q^" + std::to_string(upto), "",
                   [target, upto](const SuiteOptions& o) { return theta_against(target.system, target.fixture, upto, o); }});
  }
}

void add_identity_checks(std::vector<GoldenCheck>& out) {
  out.push_back({5, "theta L1 = (theta2^6 + theta3^6 + theta4^6)(q^4) / 2", "", [](const SuiteOptions& o) {
                   const QSeries closed = reference_series("L1_D6plus");
                   const int upto = closed.truncation();
                   const ThetaSeries t = theta_series(cache().gram("A1"), upto, o.enumeration);
                   const auto diff = series_diff(as_big(t), closed, upto);
                   if (!diff.empty()) return mismatch(diff);
                   return pass("exact to q^" + std::to_string(upto));
                 }});
  out.push_back({5, "theta L1 = b1 + 32 b4 + 60 b5", "", [](const SuiteOptions& o) {
                   const QSeries combo = (reference_series("b1") + BigInt(32) * reference_series("b4") +
                                          BigInt(60) * reference_series("b5"))
                                             .in_unit(ExponentUnit::Q);
                   const int upto = combo.truncation();
                   const ThetaSeries t = theta_series(cache().gram("A1"), upto, o.enumeration);
                   const auto diff = series_diff(as_big(t), combo, upto);
                   if (!diff.empty()) return mismatch(diff);
                   return pass("exact to q^" + std::to_string(upto));
                 }});
}

void add_structural_checks(std::vector<GoldenCheck>& out, Scope scope) {
  for (const auto& system : shipped_su3_systems()) {
    const std::string label = display_name(system);
    out.push_back({6, "count law " + label, "", [system](const SuiteOptions&) {
                     const auto& t = cache().table(system);
                     const std::size_t n = enumerate_ribbon(t).size();
                     const std::size_t want = std::size_t(t.rank()) * t.N() * t.N() / 3;
                     return expect(n == want && t.rank() * t.N() * t.N() % 3 == 0,
                                   std::to_string(n) + " ribbon points, r_E N^2/3 = " + std::to_string(want));
                   }});
    out.push_back({6, "rank law " + label, "", [system](const SuiteOptions&) {
                     const auto& c = cache().coords(system);
                     const auto& t = c.table();
                     const int want = 2 * t.rank();
                     std::string note;
                     if (system[0] == 'A' && system.size() == 2 && (t.N() - 2) * (t.N() - 1) != want)
                       return mismatch("2 r_E = " + std::to_string(want) + " differs from (N-2)(N-1)");
                     const auto pts = enumerate_ribbon(t);
                     int rank;
                     if (pts.size() <= 200) {
                       rank = exact_rank(all_pairs_table(t, pts));
                       note = "exact rank of the " + std::to_string(pts.size()) + "-point table";
                     } else {
                       rank = certify_table_rank(c).rank();
                       note = "basis rows span all " + std::to_string(pts.size()) + " rows";
                     }
                     return expect(rank == want, "rank " + std::to_string(rank) + " (" + note + "), 2 r_E = " +
                                                     std::to_string(want));
                   }});
    out.push_back({6, "norm law " + label, "", [system](const SuiteOptions&) {
                     const auto& c = cache().coords(system);
                     const auto roots = c.all_roots();
                     for (const auto& x : roots)
                       if (quadratic_form(c.gram(), x) != 6) return mismatch("hyper-root of norm " + std::to_string(quadratic_form(c.gram(), x)));
                     return pass(std::to_string(roots.size()) + " hyper-roots of norm 6");
                   }});
    out.push_back({6, "positive definite " + label, "", [system](const SuiteOptions&) {
                     return expect(is_positive_definite(cache().gram(system)), "rational LDL^T pivots");
                   }});
    const int upto = basis_compare_norm(system, scope);
    out.push_back({6, "B1/B3 agree " + label + " (theta to q^" + std::to_string(upto) + ")",
                   b3_discrepancy(system), [system, upto](const SuiteOptions& o) {
                     return basis_agreement(system, BasisLabel::B3, upto, o);
                   }});
    // B2 reduces poorly for E21; its minimal shell is enough next to the certificate.
    const int upto2 = system == "E21" ? 4 : upto;
    out.push_back({0, "B1/B2 agree " + label + " (theta to q^" + std::to_string(upto2) + ")", "",
                   [system, upto2](const SuiteOptions& o) {
                     return basis_agreement(system, BasisLabel::B2, upto2, o);
                   }});
  }
  for (const std::string system : {"A1", "A2", "A3", "A4", "A5", "A6"}) {
    out.push_back({6, "kissing " + display_name(system) + " = |R|, minimal vectors are the hyper-roots", "",
                   [system](const SuiteOptions& o) {
                     const auto& c = cache().coords(system);
                     const auto k = kissing_data(c, o.enumeration);
                     const std::uint64_t roots = root_count(c.table());
                     return expect(k.min_norm == 6 && k.kissing_number == roots && k.min_vectors_are_hyperroots,
                                   "min norm " + std::to_string(k.min_norm) + ", kissing " +
                                       std::to_string(k.kissing_number) + ", |R| " + std::to_string(roots));
                   }});
  }
  out.push_back({6, "kissing D3 = 36, span dimension 6", "", [](const SuiteOptions& o) {
                   const auto k = kissing_data(cache().coords("D3"), o.enumeration);
                   return expect(k.min_norm == 4 && k.kissing_number == 36 && !k.min_vectors_are_hyperroots &&
                                     k.span_dim_of_min_shell == 6,
                                 "min norm " + std::to_string(k.min_norm) + ", kissing " +
                                     std::to_string(k.kissing_number) + ", span " +
                                     std::to_string(k.span_dim_of_min_shell));
                 }});
  out.push_back({6, "kissing E21 = 144", "", [](const SuiteOptions& o) {
                   const auto k = kissing_data(cache().coords("E21"), o.enumeration);
                   return expect(k.min_norm == 4 && k.kissing_number == 144 && !k.min_vectors_are_hyperroots,
                                 "min norm " + std::to_string(k.min_norm) + ", kissing " +
                                     std::to_string(k.kissing_number));
                 }});
  out.push_back({6, "E9 norm-4 shell = 756, no hyper-roots", "", [](const SuiteOptions& o) {
                   const auto s = shell_decomposition(cache().coords("E9"), 4, o.enumeration);
                   return expect(s.total == 756 && s.hyperroot_count == 0,
                                 std::to_string(s.total) + " vectors, " + std::to_string(s.hyperroot_count) +
                                     " hyper-roots");
                 }});
}

void add_field_checks(std::vector<GoldenCheck>& out) {
  for (const std::string system : {"A1", "A2", "D3"}) {
    out.push_back({7, "root fields harmonic " + display_name(system), "", [system](const SuiteOptions&) {
                     const auto& t = cache().table(system);
                     const auto pts = enumerate_ribbon(t);
                     for (const auto& p : pts) {
                       const auto rep = check_harmonicity(t, root_field(t, p));
                       if (!rep.harmonic)
                         return mismatch("field of " + to_string(p) + " fails at " + to_string(*rep.counterexample));
                     }
                     return pass(std::to_string(pts.size()) + " root fields");
                   }});
  }
  out.push_back({7, "Dirac projection L1, every point", "", [](const SuiteOptions&) {
                   const auto& c = cache().coords("A1");
                   const DiracProjector proj(c);
                   const int n2 = c.table().N() * c.table().N();
                   for (const auto& u : proj.ribbon()) {
                     const auto p = proj.project(u);
                     const auto x = c.express(u);
                     for (std::size_t i = 0; i < p.size(); ++i)
                       if (p[i] * n2 != x[i]) return mismatch("N^2 P_u differs from the hyper-root at " + to_string(u));
                   }
                   return pass(std::to_string(proj.ribbon().size()) + " points, N^2 = " + std::to_string(n2));
                 }});
  out.push_back({7, "Dirac projection L2, 10 sampled points", "", [](const SuiteOptions&) {
                   const auto& c = cache().coords("A2");
                   const DiracProjector proj(c);
                   const int n2 = c.table().N() * c.table().N();
                   std::vector<RibbonPoint> pts = proj.ribbon();
                   std::mt19937 rng(20240601);
                   std::shuffle(pts.begin(), pts.end(), rng);
                   pts.resize(10);
                   for (const auto& u : pts) {
                     const auto p = proj.project(u);
                     const auto x = c.express(u);
                     for (std::size_t i = 0; i < p.size(); ++i)
                       if (p[i] * n2 != x[i]) return mismatch("N^2 P_u differs from the hyper-root at " + to_string(u));
                   }
                   return pass("10 points, N^2 = " + std::to_string(n2));
                 }});
}

void add_su2_checks(std::vector<GoldenCheck>& out) {
  const std::vector<std::tuple<std::string, std::size_t, std::string>> cases = {{"su2.A4", 20, "5"},
                                                                                {"su2.E6", 72, "3"}};
  for (const auto& [system, roots, det] : cases) {
    out.push_back({8, system + ": " + std::to_string(roots) + " roots of norm 2, det " + det, "",
                   [system, roots, det](const SuiteOptions&) {
                     const auto& c = cache().coords(system);
                     const auto all = c.all_roots();
                     for (const auto& x : all)
                       if (quadratic_form(c.gram(), x) != 2) return mismatch("root of norm " + std::to_string(quadratic_form(c.gram(), x)));
                     const std::set<std::vector<std::int64_t>> distinct(all.begin(), all.end());
                     for (auto x : all) {
                       for (auto& v : x) v = -v;
                       if (!distinct.count(x)) return mismatch("root set not closed under negation");
                     }
                     const auto d = to_decimal(determinant(c.gram()));
                     const bool pd = is_positive_definite(c.gram());
                     return expect(distinct.size() == roots && all.size() == roots && d == det && pd,
                                   std::to_string(distinct.size()) + " distinct roots, det " + d +
                                       (pd ? ", positive definite" : ", not positive definite"));
                   }});
  }
}

void add_oracle_checks(std::vector<GoldenCheck>& out) {
  for (const std::string system : {"A0", "A1"}) {
    out.push_back({9, "Fincke-Pohst = box count " + display_name(system) + " to norm 12", "",
                   [system](const SuiteOptions& o) {
                     const auto& g = cache().gram(system);
                     const auto a = theta_series(g, 12, o.enumeration);
                     const auto b = box_theta_series(g, 12);
                     return expect(a == b, "box visited " + std::to_string(b.nodes) + " points");
                   }});
  }
}

void add_other_checks(std::vector<GoldenCheck>& out) {
  for (const auto& [system, n] : std::vector<std::pair<std::string, std::size_t>>{{"A1", 16}, {"A2", 50}, {"D3", 72}}) {
    out.push_back({0, "ribbon " + display_name(system) + " has " + std::to_string(n) + " points", "",
                   [system, n](const SuiteOptions&) {
                     const auto m = enumerate_ribbon(cache().table(system)).size();
                     return expect(m == n, std::to_string(m));
                   }});
  }
  for (const auto& [system, n] : std::vector<std::pair<std::string, std::size_t>>{{"A0", 6}, {"A2", 100}, {"A4", 490}}) {
    out.push_back({0, "|R| " + display_name(system) + " = " + std::to_string(n), "", [system, n](const SuiteOptions&) {
                     const auto m = root_count(cache().table(system));
                     return expect(m == n, std::to_string(m));
                   }});
  }
  for (const auto& [system, n] : std::vector<std::pair<std::string, int>>{{"A2", 12}, {"A3", 20}}) {
    out.push_back({0, "B1 basis " + display_name(system) + " has " + std::to_string(n) + " elements", "",
                   [system, n](const SuiteOptions&) {
                     const int m = int(cache().coords(system).basis().elements.size());
                     return expect(m == n, std::to_string(m));
                   }});
  }
  out.push_back({0, "Gram L0 = 3 x Cartan matrix of SU(3)", "", [](const SuiteOptions&) {
                   return expect(cache().gram("A0") == IntMatrix::from_rows({{6, -3}, {-3, 6}}),
                                 format_matrix_text(cache().gram("A0")));
                 }});
  out.push_back({0, "L1 all-pairs table ~ printed 16x16 table, rank 6", "", [](const SuiteOptions&) {
                   const auto& t = cache().table("A1");
                   const IntMatrix table = all_pairs_table(t, enumerate_ribbon(t));
                   const auto printed = published_gram("L1_table");
                   if (!printed) return mismatch("no embedded table");
                   const int r = exact_rank(table);
                   const auto e = signed_perm_equivalent(table, *printed);
                   return expect(r == 6 && e.status == Equivalence::Equivalent,
                                 "rank " + std::to_string(r) +
                                     (e.status == Equivalence::Equivalent ? ", witness found" : ", no witness"));
                 }});
  out.push_back({0, "D3 printed vector (1,1,1,1,-2,-1,0,0,0,0,1,1) has norm 4 and lies in the computed shell", "",
                 [](const SuiteOptions& o) {
                   const std::vector<std::int64_t> v = {1, 1, 1, 1, -2, -1, 0, 0, 0, 0, 1, 1};
                   const auto printed = published_gram("D3");
                   if (quadratic_form(*printed, v) != 4) return mismatch("norm under the printed Gram is not 4");
                   const auto& g = cache().gram("D3");
                   const auto e = signed_perm_equivalent(g, *printed);
                   if (!e.witness) return mismatch("no witness to map coordinates");
                   std::vector<std::int64_t> w(v.size());
                   for (std::size_t i = 0; i < v.size(); ++i) w[e.witness->perm[i]] = e.witness->sign[i] * v[i];
                   auto canon = w;
                   for (auto c : canon)
                     if (c) {
                       if (c < 0)
                         for (auto& y : canon) y = -y;
                       break;
                     }
                   const auto s = shell(g, 4, o.enumeration);
                   const bool found = std::find(s.vectors.begin(), s.vectors.end(), canon) != s.vectors.end();
                   return expect(found && s.vectors.size() == 18,
                                 std::to_string(s.vectors.size()) + " canonical vectors" + (found ? ", found" : ", missing"));
                 }});
  out.push_back({0, "shell L1 norm 6: 32 vectors, all hyper-roots", "", [](const SuiteOptions& o) {
                   const auto s = shell_decomposition(cache().coords("A1"), 6, o.enumeration);
                   return expect(s.total == 32 && s.hyperroot_count == 32 && s.other_count == 0,
                                 std::to_string(s.total) + "/" + std::to_string(s.hyperroot_count) + "/" +
                                     std::to_string(s.other_count));
                 }});
  out.push_back({0, "shell D6 norm 6: 2322 vectors, 648 hyper-roots", "", [](const SuiteOptions& o) {
                   const auto s = shell_decomposition(cache().coords("D6"), 6, o.enumeration);
                   const auto four = shell_decomposition(cache().coords("D6"), 4, o.enumeration);
                   return expect(s.total == 2322 && s.hyperroot_count == 648 && four.total == 162,
                                 std::to_string(s.total) + " vectors, " + std::to_string(s.hyperroot_count) +
                                     " hyper-roots, " + std::to_string(s.other_count) + " others; norms 4..6 hold " +
                                     std::to_string(s.total + four.total));
                 }});
  out.push_back({0, "Legendre (4096/p) = 1 for p = 3, 5, 7, 11, 13", "", [](const SuiteOptions&) {
                   std::string s;
                   bool ok = true;
                   for (int p : {3, 5, 7, 11, 13}) {
                     const int l = legendre_symbol(BigInt(4096), p);
                     ok = ok && l == 1;
                     s += (s.empty() ? "" : " ") + std::to_string(l);
                   }
                   return expect(ok, s);
                 }});
  out.push_back({0, "L5 prefix 1 + 896 q^6 + 11856 q^8 + 154368 q^10", "", [](const SuiteOptions& o) {
                   return theta_against("A5", "theta_L5", 10, o);
                 }});
  out.push_back({0, "E5 prefix 1 + 512 q^6 + 11232 q^8", "", [](const SuiteOptions& o) {
                   return theta_against("E5", "theta_E5", 8, o);
                 }});
}

}  // namespace

std::string to_string(Scope s) { return s == Scope::Quick ? "quick" : "full"; }

Scope parse_scope(const std::string& s) {
  if (s == "quick") return Scope::Quick;
  if (s == "full") return Scope::Full;
  throw Error("unknown scope '" + s + "' (quick or full)");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "PASS";
    case Outcome::Mismatch:
      return "FAIL";
    case Outcome::BudgetExceeded:
      return "BUDGET";
  }
  return "?";
}

std::vector<GoldenCheck> golden_suite(Scope scope) {
  std::vector<GoldenCheck> out;
  add_gram_checks(out);
  add_invariant_checks(out);
  add_theta_checks(out, scope);
  add_identity_checks(out);
  add_structural_checks(out, scope);
  add_field_checks(out);
  add_su2_checks(out);
  add_oracle_checks(out);
  add_other_checks(out);
  return out;
}

std::vector<CheckRecord> run_golden_suite(const SuiteOptions& opts,
                                          const std::function<void(const CheckRecord&)>& progress) {
  std::vector<CheckRecord> records;
  for (const auto& check : golden_suite(opts.scope)) {
    CheckRecord rec{check.criterion, check.name, Outcome::Pass, {}, check.known_discrepancy, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto r = check.run(opts);
      rec.outcome = r.outcome;
      rec.detail = r.detail;
    } catch (const BudgetExceeded& e) {
      rec.outcome = Outcome::BudgetExceeded;
      rec.detail = std::string(e.what()) + " after " + std::to_string(e.nodes) + " nodes";
    } catch (const std::exception& e) {
      rec.outcome = Outcome::Mismatch;
      rec.detail = std::string("error: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(rec);
    records.push_back(std::move(rec));
  }
  return records;
}

int golden_exit_code(const std::vector<CheckRecord>& records) {
  bool budget = false;
  for (const auto& r : records) {
    if (r.outcome == Outcome::Mismatch) return 2;
    if (r.outcome == Outcome::BudgetExceeded) budget = true;
  }
  return budget ? 3 : 0;
}

}  // namespace hyperlattice
