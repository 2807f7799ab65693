#include <doctest.h>

#include <map>
#include <memory>
#include <random>
#include <set>

#include "hyperlattice/errors.hpp"
#include "hyperlattice/fusion.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/ribbon.hpp"

using namespace hyperlattice;

namespace {

const FusionTable& table(const std::string& name) {
  static std::map<std::string, std::unique_ptr<FusionTable>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<FusionTable>(load_fusion_system(name));
  return *slot;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

TEST_CASE("ribbon size is r_E N^2 / 3 and every point is admissible") {
  for (const auto& name : shipped_su3_systems()) {
    CAPTURE(name);
    const auto& t = table(name);
    const auto pts = enumerate_ribbon(t);
    CHECK(int(pts.size()) * 3 == t.rank() * t.N() * t.N());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& p : pts) CHECK(admissible(t, p));
  }
  CHECK(enumerate_ribbon(table("A1")).size() == 16);
  CHECK(enumerate_ribbon(table("A0")).size() == 3);
  const auto& su2 = table("su2.A4");
  CHECK(int(enumerate_ribbon(su2).size()) == su2.rank() * su2.N());
}

TEST_CASE("admissibility follows the grading") {
  const auto& t = table("A2");
  const auto& g = t.system().grading;
  for (int m1 = 0; m1 < t.N(); ++m1)
    for (int m2 = 0; m2 < t.N(); ++m2)
      for (int a = 0; a < t.rank(); ++a)
        CHECK(admissible(t, {m1, m2, a}) == (mod(g[a] - m1 - 2 * m2, 3) == 0));
  CHECK_FALSE(admissible(t, {0, 0, -1}));
  CHECK_FALSE(admissible(t, {0, 0, t.rank()}));
}

TEST_CASE("inner product: norm 6, symmetry, integrality of the table") {
  for (const char* name : {"A1", "A2", "D3", "E5"}) {
    CAPTURE(name);
    const auto& t = table(name);
    const auto pts = enumerate_ribbon(t);
    const IntMatrix m = all_pairs_table(t, pts);
    CHECK(m.is_symmetric());
    for (int i = 0; i < m.rows(); ++i) CHECK(m(i, i) == 6);
    // Cauchy-Schwarz for a positive semi-definite table of equal norms
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) CHECK(std::abs(m(i, j)) <= 6);
  }
  const auto& t = table("A1");
  const RibbonPoint a{0, 0, 0}, b{1, 0, 1};
  CHECK(inner_product(t, SignedPoint{a, -1}, SignedPoint{b, 1}) == -inner_product(t, a, b));
}

TEST_CASE("inner products are invariant under relabelling by the rotation") {
  // P is a permutation commuting with every F, so relabelling both vertices
  // through it preserves every term of the six-term sum.
  for (const char* name : {"A1", "A3", "E5"}) {
    CAPTURE(name);
    const auto& t = table(name);
    const auto pts = enumerate_ribbon(t);
    const auto& perm = t.rotation_permutation();
    for (std::size_t i = 0; i < pts.size(); i += 3)
      for (std::size_t j = 0; j < pts.size(); j += 2) {
        RibbonPoint x = pts[i], y = pts[j];
        RibbonPoint x2{x.m1, x.m2, perm[x.vertex]}, y2{y.m1, y.m2, perm[y.vertex]};
        CHECK(inner_product(t, x, y) == inner_product(t, x2, y2));
      }
  }
}

TEST_CASE("SU2 inner products") {
  const auto& t = table("su2.A4");
  const auto pts = enumerate_ribbon(t);
  const IntMatrix m = all_pairs_table(t, pts);
  CHECK(m.is_symmetric());
  for (int i = 0; i < m.rows(); ++i) CHECK(m(i, i) == 2);
  CHECK(root_norm(t) == 2);
  CHECK(lattice_rank(t) == 4);
  CHECK(exact_rank(m) == 4);
  CHECK_THROWS_AS(su2_inner_product(table("A1"), pts[0], pts[0]), Error);

  // the ribbon already holds both signs: A4 has 20 roots
  CHECK(root_count(t) == 20);
  const HyperRootCoordinates c(t, select_basis(t, BasisLabel::B1));
  const auto all = c.all_roots();
  const std::set<std::vector<std::int64_t>> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 20);
  for (auto x : all) {
    for (auto& v : x) v = -v;
    CHECK(distinct.count(x));
  }
  CHECK(root_count(table("A1")) == 32);
}

TEST_CASE("bases: sizes, Gram is a principal submatrix of the table") {
  for (const auto& name : shipped_su3_systems()) {
    CAPTURE(name);
    const auto& t = table(name);
    for (auto label : {BasisLabel::B1, BasisLabel::B2}) {
      const auto basis = select_basis(t, label);
      CHECK(int(basis.elements.size()) == lattice_rank(t));
      const IntMatrix g = gram_matrix(t, basis);
      CHECK(g.is_symmetric());
      if (g.rows() <= 24) CHECK(is_positive_definite(g));
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
          CHECK(g(i, j) == inner_product(t, basis.elements[i], basis.elements[j]));
    }
  }
  CHECK(parse_basis_label("B2") == BasisLabel::B2);
  CHECK_THROWS_AS(parse_basis_label("B4"), Error);
  CHECK(to_string(BasisLabel::B3) == "B3");
}

TEST_CASE("B3 positions do not always give a basis") {
  CHECK_THROWS_AS(select_basis(table("A1"), BasisLabel::B3), BasisDegenerate);
  CHECK_THROWS_AS(select_basis(table("E5"), BasisLabel::B3), BasisDegenerate);
  const auto& d3 = table("D3");
  const IntMatrix g3 = gram_matrix(d3, select_basis(d3, BasisLabel::B3));
  CHECK(determinant(g3) == 9 * determinant(gram_matrix(d3, select_basis(d3, BasisLabel::B1))));
  const auto& a2 = table("A2");
  CHECK(determinant(gram_matrix(a2, select_basis(a2, BasisLabel::B3))) == 1953125);
}

TEST_CASE("A0 lattice is the hexagonal lattice scaled by 3") {
  const auto& t = table("A0");
  const IntMatrix g = gram_matrix(t, select_basis(t, BasisLabel::B1));
  CHECK(g.rows() == 2);
  CHECK(determinant(g) == 27);
  CHECK(g(0, 0) == 6);
  CHECK(std::abs(g(0, 1)) == 3);
}

TEST_CASE("coordinates reproduce the inner products") {
  // G x = (<e_i, p>)_i is the defining equation; check it directly.
  for (const char* name : {"A1", "A2", "D3", "A4"}) {
    CAPTURE(name);
    const auto& t = table(name);
    const HyperRootCoordinates c(t, select_basis(t, BasisLabel::B1));
    const auto pts = enumerate_ribbon(t);
    const auto& b = c.basis().elements;
    for (const auto& p : pts) {
      const auto x = c.express(p);
      for (int i = 0; i < c.gram().rows(); ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < c.gram().cols(); ++j) s += c.gram()(i, j) * x[j];
        CHECK(s == inner_product(t, b[i], p));
      }
      CHECK(quadratic_form(c.gram(), x) == 6);
    }
    const auto all = c.all_roots();
    CHECK(all.size() == 2 * pts.size());
    CHECK(std::set<std::vector<std::int64_t>>(all.begin(), all.end()).size() == all.size());
    // basis elements have unit coordinates
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto x = c.express(b[i]);
      for (std::size_t j = 0; j < x.size(); ++j) CHECK(x[j] == (i == j ? 1 : 0));
    }
    CHECK(express_in_basis(c.gram(), t, c.basis(), pts.back()) == c.express(pts.back()));
  }
}

TEST_CASE("rank of the all-pairs table") {
  for (const char* name : {"A0", "A1", "A2", "D3"}) {
    CAPTURE(name);
    const auto& t = table(name);
    CHECK(exact_rank(all_pairs_table(t, enumerate_ribbon(t))) == lattice_rank(t));
    const auto cert = certify_table_rank(HyperRootCoordinates(t, select_basis(t, BasisLabel::B1)));
    CHECK(cert.rank() == lattice_rank(t));
  }
}

TEST_CASE("root fields are harmonic and Dirac measures are not") {
  for (const char* name : {"A1", "A2", "A3", "D3", "E5"}) {
    CAPTURE(name);
    const auto& t = table(name);
    const auto pts = enumerate_ribbon(t);
    for (std::size_t i = 0; i < pts.size(); i += std::max<std::size_t>(1, pts.size() / 12))
      CHECK(check_harmonicity(t, root_field(t, pts[i])).harmonic);
    RibbonField sum(t);
    sum += root_field(t, pts[0]);
    sum += (-3) * root_field(t, pts.back());
    CHECK(check_harmonicity(t, sum).harmonic);
    RibbonField delta(t);
    delta.at(pts[0]) = 1;
    const auto rep = check_harmonicity(t, delta);
    CHECK_FALSE(rep.harmonic);
    REQUIRE(rep.counterexample);
    CHECK(rep.graph_sum != rep.weight_sum);
  }
  const auto& s = table("su2.E6");
  for (const auto& p : enumerate_ribbon(s)) CHECK(check_harmonicity(s, root_field(s, p)).harmonic);
}

TEST_CASE("field values are periodic up to rotation") {
  const auto& t = table("A2");
  const auto f = root_field(t, {1, 0, 1});
  const auto& perm = t.rotation_permutation();
  const int n = t.N();
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      for (int b = 0; b < t.rank(); ++b) {
        CHECK(field_value(t, f, m1, m2, b) == f.at(m1, m2, b));
        CHECK(field_value(t, f, m1 + n, m2, b) == f.at(m1, m2, perm[b]));
        CHECK(field_value(t, f, m1 + 3 * n, m2 - 3 * n, b) == f.at(m1, m2, b));
      }
}

TEST_CASE("Dirac projection is an orthogonal projection") {
  for (const char* name : {"A1", "A2"}) {
    CAPTURE(name);
    const auto& t = table(name);
    const HyperRootCoordinates c(t, select_basis(t, BasisLabel::B1));
    const DiracProjector proj(c);
    const auto& pts = proj.ribbon();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
      const auto& u = pts[rng() % pts.size()];
      const auto coeffs = proj.project(u);
      CHECK(coeffs == project_dirac(c, u));
      const auto image = proj.evaluate(coeffs);
      // residual orthogonal to every basis root field
      for (const auto& e : c.basis().elements) {
        Rational s = 0;
        for (std::size_t v = 0; v < pts.size(); ++v)
          s += ((pts[v] == u ? Rational(1) : Rational(0)) - image[v]) * inner_product(t, e, pts[v]);
        CHECK(s == 0);
      }
      // idempotent
      CHECK(proj.project(image) == coeffs);
    }
    // a root field projects to itself
    const auto f = root_field(t, pts[2]);
    std::vector<Rational> vals(pts.size());
    for (std::size_t v = 0; v < pts.size(); ++v) vals[v] = f.at(pts[v]);
    CHECK(proj.evaluate(proj.project(vals)) == vals);
    CHECK_THROWS_AS(proj.project(RibbonPoint{0, 0, 99}), Error);
  }
}

TEST_CASE("essential matrices: support rule and vertex 0 row") {
  for (const char* name : {"A2", "D3", "E5"}) {
    CAPTURE(name);
    const auto& t = table(name);
    const auto& g = t.system().grading;
    for (int a = 0; a < t.rank(); ++a) {
      const auto e = essential_matrix(t, a);
      for (int n1 = 0; n1 < t.N(); ++n1)
        for (int n2 = 0; n2 < t.N(); ++n2)
          for (int b = 0; b < t.rank(); ++b)
            if (e.at(n1, n2, b)) CHECK(mod(g[b] - g[a] - n1 - 2 * n2, 3) == 0);
    }
    // tau_0 at Dynkin label 0 is the trivial representation
    const auto e0 = essential_matrix(t, 0);
    for (int b = 0; b < t.rank(); ++b) CHECK(e0.at(0, 0, b) == (b == 0 ? 1 : 0));
  }
  CHECK_THROWS_AS(essential_matrix(table("A1"), 5), std::out_of_range);
}

TEST_CASE("to_string of a ribbon point") { CHECK(to_string(RibbonPoint{1, 2, 3}) == "((1,2),3)"); }
