#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlattice/fusion.hpp"
#include "hyperlattice/lattice.hpp"

namespace hyperlattice {

// A weight position reduced to the period domain together with a graph
// vertex. SU3 positions live in the N x N rhombus; SU2 positions use m1 in
// [0, 2N) and m2 = 0.
struct RibbonPoint {
  int m1 = 0;
  int m2 = 0;
  int vertex = 0;
  auto operator<=>(const RibbonPoint&) const = default;
};

struct SignedPoint {
  RibbonPoint point;
  int sign = 1;
};

std::string to_string(const RibbonPoint& p);

bool admissible(const FusionTable& table, const RibbonPoint& p);
std::vector<RibbonPoint> enumerate_ribbon(const FusionTable& table);

// 6 for SU3, 2 for SU2.
int root_norm(const FusionTable& table);
// Lattice rank: 2 r_E for SU3, r_E for SU2.
int lattice_rank(const FusionTable& table);
// Number of hyper-roots |R|: the SU3 ribbon and its negatives; the SU2
// ribbon Z_2N x_Z2 E already holds both signs, r_E N points.
std::size_t root_count(const FusionTable& table);

// Inner product of two localized hyper-roots; lambda = n - m for
// alpha = (m, a), beta = (n, b).
std::int64_t inner_product(const FusionTable& table, const RibbonPoint& alpha, const RibbonPoint& beta);
std::int64_t inner_product(const FusionTable& table, const SignedPoint& alpha, const SignedPoint& beta);
std::int64_t su2_inner_product(const FusionTable& table, const RibbonPoint& alpha, const RibbonPoint& beta);

enum class BasisLabel { B1, B2, B3 };
std::string to_string(BasisLabel label);
BasisLabel parse_basis_label(const std::string& s);

struct OrderedBasis {
  BasisLabel label = BasisLabel::B1;
  std::vector<RibbonPoint> elements;
};

std::vector<std::pair<int, int>> basis_positions(const FusionTable& table, BasisLabel label);
OrderedBasis select_basis(const FusionTable& table, BasisLabel label);
IntMatrix gram_matrix(const FusionTable& table, const OrderedBasis& basis);
IntMatrix all_pairs_table(const FusionTable& table, const std::vector<RibbonPoint>& points);

// Coordinates of localized hyper-roots in a fixed basis.
class HyperRootCoordinates {
 public:
  HyperRootCoordinates(const FusionTable& table, OrderedBasis basis);

  const FusionTable& table() const { return *table_; }
  const OrderedBasis& basis() const { return basis_; }
  const IntMatrix& gram() const { return gram_; }

  // Throws NotInLattice when the solution is not integral.
  std::vector<std::int64_t> express(const RibbonPoint& p) const;
  std::vector<std::int64_t> express(const SignedPoint& p) const;
  // Coordinates of every hyper-root. SU3: ribbon points in ribbon order,
  // then their negatives. SU2: the ribbon points, which are closed under
  // negation.
  std::vector<std::vector<std::int64_t>> all_roots() const;

 private:
  const FusionTable* table_;
  OrderedBasis basis_;
  IntMatrix gram_;
  ScaledInverse inverse_;
};

std::vector<std::int64_t> express_in_basis(const IntMatrix& gram, const FusionTable& table,
                                           const OrderedBasis& basis, const RibbonPoint& p);

std::int64_t quadratic_form(const IntMatrix& gram, const std::vector<std::int64_t>& x);

// Integer function on every (position, vertex) pair of the period domain.
class RibbonField {
 public:
  RibbonField() = default;
  explicit RibbonField(const FusionTable& table);
  int width1() const { return w1_; }
  int width2() const { return w2_; }
  int vertices() const { return r_; }
  std::int64_t& at(int m1, int m2, int b) { return v_[(std::size_t(m1) * w2_ + m2) * r_ + b]; }
  std::int64_t at(int m1, int m2, int b) const { return v_[(std::size_t(m1) * w2_ + m2) * r_ + b]; }
  std::int64_t& at(const RibbonPoint& p) { return at(p.m1, p.m2, p.vertex); }
  std::int64_t at(const RibbonPoint& p) const { return at(p.m1, p.m2, p.vertex); }
  const std::vector<std::int64_t>& values() const { return v_; }
  RibbonField& operator+=(const RibbonField& o);
  friend RibbonField operator*(std::int64_t s, RibbonField f);
  friend bool operator==(const RibbonField&, const RibbonField&) = default;

 private:
  int w1_ = 0, w2_ = 0, r_ = 0;
  std::vector<std::int64_t> v_;
};

RibbonField root_field(const FusionTable& table, const RibbonPoint& alpha);

struct HarmonicityReport {
  bool harmonic = true;
  std::optional<RibbonPoint> counterexample;
  std::int64_t graph_sum = 0;
  std::int64_t weight_sum = 0;
};

// Compares, at every (position, vertex) pair, the sum over graph
// in-neighbours (tails of arrows ending at the vertex) with the sum at the
// same vertex over the weight-lattice in-neighbours X + w, w in
// {(1,0), (-1,1), (0,-1)}. Positions leaving the rhombus are reduced with
// the vertex relabelled by the rotation P. SU2 uses neighbours m +- 1.
HarmonicityReport check_harmonicity(const FusionTable& table, const RibbonField& field);

// Value of a field at an arbitrary weight position, reduced to the domain.
std::int64_t field_value(const FusionTable& table, const RibbonField& field, int m1, int m2, int b);

// Orthogonal projection of Dirac measures onto the span of the root fields.
class DiracProjector {
 public:
  explicit DiracProjector(const HyperRootCoordinates& coords);
  // Coefficients of the projection of delta_u on the basis root fields.
  std::vector<Rational> project(const RibbonPoint& u) const;
  // Coefficients of the projection of an arbitrary rational function given
  // by its values on the ribbon (ribbon order).
  std::vector<Rational> project(const std::vector<Rational>& values) const;
  // Values on the ribbon of the function with the given coefficients.
  std::vector<Rational> evaluate(const std::vector<Rational>& coeffs) const;
  const std::vector<RibbonPoint>& ribbon() const { return ribbon_; }
  // Gram matrix of the basis root fields as vectors on the ribbon.
  const IntMatrix& frame_gram() const { return frame_; }

 private:
  std::vector<RibbonPoint> ribbon_;
  IntMatrix values_;  // rank x |ribbon|
  IntMatrix frame_;
  RationalMatrix frame_inverse_;
};

std::vector<Rational> project_dirac(const HyperRootCoordinates& coords, const RibbonPoint& u);

// (tau_a)(n, b) = (F_{n})_{ab} for Dynkin position n, i.e. shifted label
// {n1 + 1, n2 + 1}. Supported where grading(b) = grading(a) + n1 + 2 n2.
RibbonField essential_matrix(const FusionTable& table, int a);

// Certifies rank(all_pairs_table) = lattice_rank: the basis Gram is
// nonsingular and every ribbon row is the integer combination of basis
// rows given by its coordinates.
struct RankCertificate {
  int lower = 0;
  bool spans = false;
  int rank() const { return spans ? lower : -1; }
};
RankCertificate certify_table_rank(const HyperRootCoordinates& coords);

}  // namespace hyperlattice
