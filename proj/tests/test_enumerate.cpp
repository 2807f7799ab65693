#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "hyperlattice/enumerate.hpp"
#include "hyperlattice/errors.hpp"
#include "hyperlattice/fusion.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/reduce.hpp"

using namespace hyperlattice;

namespace {

// Positive definite even Gram matrix 2 B^T B + 2 I with small entries.
IntMatrix random_gram(std::mt19937& rng, int n, int spread = 1) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = dist(rng);
  IntMatrix g = 2 * (b.transpose() * b);
  for (int i = 0; i < n; ++i) g(i, i) += 2;
  return g;
}

IntMatrix a2_root() { return IntMatrix{{2, -1}, {-1, 2}}; }

IntMatrix d4_root() { return IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}; }

IntMatrix e8_root() {
  return IntMatrix{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
                   {0, 0, -1, 2, -1, 0, 0, 0},  {0, 0, 0, -1, 2, -1, 0, 0},  {0, 0, 0, 0, -1, 2, -1, 0},
                   {0, 0, 0, 0, 0, -1, 2, 0},   {0, 0, -1, 0, 0, 0, 0, 2}};
}

// sigma_3 for the E8 theta series 1 + 240 sum sigma_3(n) q^{2n}.
std::uint64_t sigma3(int n) {
  std::uint64_t s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += std::uint64_t(d) * d * d;
  return s;
}

}  // namespace

TEST_CASE("Fincke-Pohst agrees with the box count on random Gram matrices") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const IntMatrix g = random_gram(rng, n);
    CAPTURE(g);
    const int bound = 14;
    const auto box = box_theta_series(g, bound);
    for (int red : {0, 1, 20}) {
      EnumerationOptions o;
      o.reduction = red;
      CHECK(theta_series(g, bound, o) == box);
    }
  }
}

TEST_CASE("classical theta series") {
  // Z: r_1(n) = 2 for squares
  const auto z = theta_series(IntMatrix{{1}}, 30);
  for (int v = 0; v <= 30; ++v) {
    const int r = int(std::lround(std::sqrt(double(v))));
    CHECK(z.at(v) == (r * r == v ? (v ? 2u : 1u) : 0u));
  }
  // A2: 6 minimal vectors, 6 at norm 6, 6 at norm 8, 12 at norm 14
  const auto a2 = theta_series(a2_root(), 14);
  CHECK(a2.at(2) == 6);
  CHECK(a2.at(4) == 0);
  CHECK(a2.at(6) == 6);
  CHECK(a2.at(8) == 6);
  CHECK(a2.at(14) == 12);
  // D4: 24 roots
  CHECK(theta_series(d4_root(), 2).at(2) == 24);
  // E8: 240 sigma_3(n)
  const auto e8 = theta_series(e8_root(), 12);
  for (int n = 1; n <= 6; ++n) CHECK(e8.at(2 * n) == 240 * sigma3(n));
  for (int n = 0; n <= 6; ++n) CHECK(e8.at(2 * n + 1) == 0);
}

TEST_CASE("thread count does not change the counts") {
  std::mt19937 rng(37);
  const IntMatrix g = random_gram(rng, 6);
  EnumerationOptions one;
  const auto base = theta_series(g, 24, one);
  for (int threads : {2, 3, 5}) {
    EnumerationOptions o;
    o.threads = threads;
    CHECK(theta_series(g, 24, o) == base);
  }
}

TEST_CASE("LLL and BKZ are unimodular changes of basis") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 6;
    const IntMatrix g = random_gram(rng, n, 2);
    for (int which = 0; which < 2; ++which) {
      const ReducedGram r = which == 0 ? lll_reduce(g) : bkz_reduce(g, 4);
      const BigInt d = determinant(r.transform);
      CHECK((d == 1 || d == -1));
      CHECK(r.transform.transpose() * g * r.transform == r.gram);
      CHECK(determinant(r.gram) == determinant(g));
    }
  }
}

TEST_CASE("LLL output satisfies the Lovasz condition") {
  std::mt19937 rng(43);
  const IntMatrix g = random_gram(rng, 6, 3);
  const auto r = lll_reduce(g, 0.99);
  const auto pivots = rational_cholesky_pivots(r.gram);
  REQUIRE(pivots);
  for (std::size_t i = 1; i < pivots->size(); ++i) {
    // B_i >= (delta - mu^2) B_{i-1} >= 0.74 B_{i-1}, with floating-point slack
    CHECK((*pivots)[i] * 100 >= (*pivots)[i - 1] * 73);
  }
}

TEST_CASE("shells list canonical vectors of the exact norm") {
  const auto d4 = d4_root();
  const auto s = shell(d4, 2);
  CHECK(s.vectors.size() == 12);
  CHECK(std::is_sorted(s.vectors.begin(), s.vectors.end()));
  for (const auto& v : s.vectors) {
    CHECK(quadratic_form(d4, v) == 2);
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
    REQUIRE(it != v.end());
    CHECK(*it > 0);
  }
  const auto all = shells(d4, 6);
  std::map<int, std::size_t> sizes;
  for (const auto& sh : all) sizes[sh.norm] = sh.vectors.size();
  const auto t = theta_series(d4, 6);
  for (int v = 1; v <= 6; ++v) CHECK(2 * sizes[v] == t.at(v));
  for (int red : {0, 1}) {
    EnumerationOptions o;
    o.reduction = red;
    CHECK(shell(d4, 4, o).vectors == shell(d4, 4).vectors);
  }
}

TEST_CASE("visit_short_vectors reports each +- pair once") {
  std::mt19937 rng(47);
  const IntMatrix g = random_gram(rng, 4);
  std::set<std::vector<std::int64_t>> seen;
  std::uint64_t calls = 0;
  visit_short_vectors(g, 12, [&](const std::vector<std::int64_t>& x, std::int64_t v) {
    ++calls;
    CHECK(quadratic_form(g, x) == v);
    CHECK(v <= 12);
    auto neg = x;
    for (auto& c : neg) c = -c;
    CHECK_FALSE(seen.count(neg));
    seen.insert(x);
  });
  CHECK(seen.size() == calls);
  const auto box = box_theta_series(g, 12);
  std::uint64_t total = 0;
  for (int v = 1; v <= 12; ++v) total += box.at(v);
  CHECK(2 * calls == total);
}

TEST_CASE("budget exhaustion raises") {
  EnumerationOptions o;
  o.node_budget = 10;
  CHECK_THROWS_AS(theta_series(e8_root(), 12, o), BudgetExceeded);
  try {
    theta_series(e8_root(), 12, o);
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes > 10);
  }
  o.threads = 3;
  CHECK_THROWS_AS(theta_series(e8_root(), 12, o), BudgetExceeded);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(theta_series(IntMatrix{{1, 2}, {2, 1}}, 4), NotPositiveDefinite);
  CHECK_THROWS_AS(theta_series(IntMatrix{{2, 1}, {0, 2}}, 4), Error);
  CHECK_THROWS_AS(theta_series(a2_root(), -1), Error);
  CHECK_THROWS_AS(box_theta_series(IntMatrix{{0}}, 4), NotPositiveDefinite);
}

TEST_CASE("kissing data and shell decomposition of a hyper-root lattice") {
  const FusionTable t(load_fusion_system("A1"));
  const HyperRootCoordinates c(t, select_basis(t, BasisLabel::B1));
  const auto k = kissing_data(c);
  CHECK(k.min_norm == 6);
  CHECK(k.kissing_number == 32);
  CHECK(k.min_vectors_are_hyperroots);
  CHECK(k.span_dim_of_min_shell == 6);
  const auto d = shell_decomposition(c, 6);
  CHECK(d.total == 32);
  CHECK(d.hyperroot_count == 32);
  CHECK(d.other_count == 0);
  const auto d8 = shell_decomposition(c, 8);
  CHECK(d8.total == 60);
  CHECK(d8.hyperroot_count == 0);
}

TEST_CASE("nonzero lists the support") {
  const auto a2 = theta_series(a2_root(), 6);
  CHECK(a2.nonzero() == std::vector<std::pair<int, std::uint64_t>>{{0, 1}, {2, 6}, {6, 6}});
  CHECK(a2.at(-1) == 0);
  CHECK(a2.at(100) == 0);
}
