#include "hyperlattice/ribbon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hyperlattice/errors.hpp"

namespace hyperlattice {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }
int floor_div(int a, int n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }

bool is_su3(const FusionTable& t) { return t.group() == Group::SU3; }

}  // namespace

std::string to_string(const RibbonPoint& p) {
  std::ostringstream os;
  os << "((" << p.m1 << "," << p.m2 << ")," << p.vertex << ")";
  return os.str();
}

bool admissible(const FusionTable& t, const RibbonPoint& p) {
  const auto& g = t.system().grading;
  if (p.vertex < 0 || p.vertex >= t.rank()) return false;
  if (is_su3(t)) return mod(g[p.vertex] - p.m1 - 2 * p.m2, 3) == 0;
  return p.m2 == 0 && mod(g[p.vertex] - p.m1, 2) == 0;
}

std::vector<RibbonPoint> enumerate_ribbon(const FusionTable& t) {
  std::vector<RibbonPoint> out;
  const int N = t.N();
  if (is_su3(t)) {
    for (int m1 = 0; m1 < N; ++m1)
      for (int m2 = 0; m2 < N; ++m2)
        for (int a = 0; a < t.rank(); ++a)
          if (admissible(t, {m1, m2, a})) out.push_back({m1, m2, a});
  } else {
    for (int m = 0; m < 2 * N; ++m)
      for (int a = 0; a < t.rank(); ++a)
        if (admissible(t, {m, 0, a})) out.push_back({m, 0, a});
  }
  return out;
}

int root_norm(const FusionTable& t) { return is_su3(t) ? 6 : 2; }
int lattice_rank(const FusionTable& t) { return is_su3(t) ? 2 * t.rank() : t.rank(); }

std::size_t root_count(const FusionTable& t) { return (is_su3(t) ? 2 : 1) * enumerate_ribbon(t).size(); }

std::int64_t inner_product(const FusionTable& t, const RibbonPoint& x, const RibbonPoint& y) {
  if (!is_su3(t)) return su2_inner_product(t, x, y);
  const int l1 = y.m1 - x.m1, l2 = y.m2 - x.m2;
  const int a = x.vertex, b = y.vertex;
  return t.lookup(l1 + 1, l2 + 1)(a, b) + t.lookup(l1 - 2, l2 + 1)(a, b) + t.lookup(l1 + 1, l2 - 2)(a, b) -
         t.lookup(l1 - 1, l2 - 1)(a, b) - t.lookup(l1 - 1, l2 + 2)(a, b) - t.lookup(l1 + 2, l2 - 1)(a, b);
}

std::int64_t inner_product(const FusionTable& t, const SignedPoint& x, const SignedPoint& y) {
  return x.sign * y.sign * inner_product(t, x.point, y.point);
}

std::int64_t su2_inner_product(const FusionTable& t, const RibbonPoint& x, const RibbonPoint& y) {
  if (is_su3(t)) throw Error("su2_inner_product needs an SU2 table");
  const int l = y.m1 - x.m1;
  return t.lookup(l + 1)(x.vertex, y.vertex) - t.lookup(l - 1)(x.vertex, y.vertex);
}

std::string to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::B1: return "B1";
    case BasisLabel::B2: return "B2";
    case BasisLabel::B3: return "B3";
  }
  return "?";
}

BasisLabel parse_basis_label(const std::string& s) {
  if (s == "B1") return BasisLabel::B1;
  if (s == "B2") return BasisLabel::B2;
  if (s == "B3") return BasisLabel::B3;
  throw Error("unknown basis label '" + s + "' (expected B1, B2 or B3)");
}

std::vector<std::pair<int, int>> basis_positions(const FusionTable& t, BasisLabel label) {
  const int N = t.N();
  if (!is_su3(t)) {
    switch (label) {
      case BasisLabel::B1: return {{0, 0}, {1, 0}};
      case BasisLabel::B2: return {{1, 0}, {2, 0}};
      case BasisLabel::B3: return {{0, 0}, {2 * N - 1, 0}};
    }
  }
  if (t.system().level == 0 && label != BasisLabel::B3) return {{1, 1}, {2, 2}};
  switch (label) {
    case BasisLabel::B1: return {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}};
    case BasisLabel::B2: return {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}};
    case BasisLabel::B3: return {{0, 0}, {1, 0}, {0, 1}, {N - 1, N - 2}, {N - 2, N - 1}, {N - 1, N - 1}};
  }
  return {};
}

OrderedBasis select_basis(const FusionTable& t, BasisLabel label) {
  OrderedBasis basis;
  basis.label = label;
  const int N = t.N();
  for (auto [p1, p2] : basis_positions(t, label)) {
    int m1 = mod(p1, is_su3(t) ? N : 2 * N), m2 = is_su3(t) ? mod(p2, N) : 0;
    for (int a = 0; a < t.rank(); ++a)
      if (admissible(t, {m1, m2, a})) basis.elements.push_back({m1, m2, a});
  }
  if (int(basis.elements.size()) != lattice_rank(t))
    throw BasisDegenerate(t.system().name + ": basis " + to_string(label) + " has " +
                          std::to_string(basis.elements.size()) + " elements, expected " +
                          std::to_string(lattice_rank(t)));
  if (determinant(gram_matrix(t, basis)) == 0)
    throw BasisDegenerate(t.system().name + ": basis " + to_string(label) + " has a singular Gram matrix");
  return basis;
}

IntMatrix gram_matrix(const FusionTable& t, const OrderedBasis& basis) {
  return all_pairs_table(t, basis.elements);
}

IntMatrix all_pairs_table(const FusionTable& t, const std::vector<RibbonPoint>& points) {
  const int n = int(points.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = inner_product(t, points[i], points[j]);
  return m;
}

std::int64_t quadratic_form(const IntMatrix& g, const std::vector<std::int64_t>& x) {
  std::int64_t s = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (!x[i]) continue;
    std::int64_t row = 0;
    for (int j = 0; j < g.cols(); ++j) row = checked_add(row, checked_mul(g(i, j), x[j]));
    s = checked_add(s, checked_mul(x[i], row));
  }
  return s;
}

HyperRootCoordinates::HyperRootCoordinates(const FusionTable& table, OrderedBasis basis)
    : table_(&table), basis_(std::move(basis)) {
  gram_ = gram_matrix(table, basis_);
  inverse_ = scaled_inverse(gram_);
}

std::vector<std::int64_t> HyperRootCoordinates::express(const RibbonPoint& p) const {
  const int n = gram_.rows();
  std::vector<std::int64_t> v(n), x(n);
  for (int i = 0; i < n; ++i) v[i] = inner_product(*table_, basis_.elements[i], p);
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul(inverse_.numerator(i, j), v[j]));
    if (s % inverse_.denominator != 0)
      throw NotInLattice(table_->system().name + ": hyper-root " + to_string(p) +
                         " has non-integral coordinates in basis " + to_string(basis_.label));
    x[i] = s / inverse_.denominator;
  }
  return x;
}

std::vector<std::int64_t> HyperRootCoordinates::express(const SignedPoint& p) const {
  auto x = express(p.point);
  for (auto& c : x) c *= p.sign;
  return x;
}

std::vector<std::vector<std::int64_t>> HyperRootCoordinates::all_roots() const {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : enumerate_ribbon(*table_)) out.push_back(express(p));
  if (!is_su3(*table_)) return out;
  const std::size_t half = out.size();
  for (std::size_t i = 0; i < half; ++i) {
    auto neg = out[i];
    for (auto& c : neg) c = -c;
    out.push_back(std::move(neg));
  }
  return out;
}

std::vector<std::int64_t> express_in_basis(const IntMatrix& gram, const FusionTable& table,
                                           const OrderedBasis& basis, const RibbonPoint& p) {
  if (!(gram == gram_matrix(table, basis))) throw Error("Gram matrix does not belong to this basis");
  return HyperRootCoordinates(table, basis).express(p);
}

RibbonField::RibbonField(const FusionTable& t)
    : w1_(is_su3(t) ? t.N() : 2 * t.N()), w2_(is_su3(t) ? t.N() : 1), r_(t.rank()),
      v_(std::size_t(w1_) * w2_ * r_, 0) {}

RibbonField& RibbonField::operator+=(const RibbonField& o) {
  if (v_.size() != o.v_.size()) throw std::invalid_argument("field shape mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = checked_add(v_[i], o.v_[i]);
  return *this;
}

RibbonField operator*(std::int64_t s, RibbonField f) {
  for (auto& v : f.v_) v = checked_mul(v, s);
  return f;
}

RibbonField root_field(const FusionTable& t, const RibbonPoint& alpha) {
  RibbonField f(t);
  for (int m1 = 0; m1 < f.width1(); ++m1)
    for (int m2 = 0; m2 < f.width2(); ++m2)
      for (int b = 0; b < f.vertices(); ++b) f.at(m1, m2, b) = inner_product(t, alpha, {m1, m2, b});
  return f;
}

std::int64_t field_value(const FusionTable& t, const RibbonField& f, int m1, int m2, int b) {
  if (!is_su3(t)) return f.at(mod(m1, 2 * t.N()), 0, b);
  const int N = t.N();
  int r1 = floor_div(m1, N), r2 = floor_div(m2, N);
  int e = mod(r1 + 2 * r2, 3);
  const auto& perm = t.rotation_permutation();
  for (int i = 0; i < e; ++i) b = perm[b];
  return f.at(m1 - r1 * N, m2 - r2 * N, b);
}

HarmonicityReport check_harmonicity(const FusionTable& t, const RibbonField& f) {
  HarmonicityReport rep;
  const IntMatrix& g = t.system().fundamental;
  static const int w[3][2] = {{1, 0}, {-1, 1}, {0, -1}};
  for (int m1 = 0; m1 < f.width1(); ++m1)
    for (int m2 = 0; m2 < f.width2(); ++m2)
      for (int b = 0; b < f.vertices(); ++b) {
        std::int64_t lhs = 0, rhs = 0;
        for (int c = 0; c < f.vertices(); ++c)
          if (g(c, b)) lhs += g(c, b) * f.at(m1, m2, c);
        if (is_su3(t)) {
          for (const auto& d : w) rhs += field_value(t, f, m1 + d[0], m2 + d[1], b);
        } else {
          rhs = field_value(t, f, m1 - 1, 0, b) + field_value(t, f, m1 + 1, 0, b);
        }
        if (lhs != rhs) {
          rep.harmonic = false;
          rep.counterexample = RibbonPoint{m1, m2, b};
          rep.graph_sum = lhs;
          rep.weight_sum = rhs;
          return rep;
        }
      }
  return rep;
}

DiracProjector::DiracProjector(const HyperRootCoordinates& coords) : ribbon_(enumerate_ribbon(coords.table())) {
  const auto& basis = coords.basis().elements;
  const int r = int(basis.size()), n = int(ribbon_.size());
  values_ = IntMatrix(r, n);
  for (int i = 0; i < r; ++i)
    for (int u = 0; u < n; ++u) values_(i, u) = inner_product(coords.table(), basis[i], ribbon_[u]);
  frame_ = values_ * values_.transpose();
  frame_inverse_ = inverse(frame_);
}

std::vector<Rational> DiracProjector::project(const std::vector<Rational>& values) const {
  const int r = values_.rows(), n = values_.cols();
  if (int(values.size()) != n) throw std::invalid_argument("function size does not match the ribbon");
  std::vector<Rational> rhs(r), out(r);
  for (int i = 0; i < r; ++i)
    for (int u = 0; u < n; ++u)
      if (values_(i, u) && values[u] != 0) rhs[i] += values_(i, u) * values[u];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += frame_inverse_[i][j] * rhs[j];
  return out;
}

std::vector<Rational> DiracProjector::project(const RibbonPoint& u) const {
  auto it = std::lower_bound(ribbon_.begin(), ribbon_.end(), u);
  if (it == ribbon_.end() || !(*it == u)) throw Error("point " + to_string(u) + " is not on the ribbon");
  const int col = int(it - ribbon_.begin());
  const int r = values_.rows();
  std::vector<Rational> out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += frame_inverse_[i][j] * values_(j, col);
  return out;
}

std::vector<Rational> DiracProjector::evaluate(const std::vector<Rational>& coeffs) const {
  const int r = values_.rows(), n = values_.cols();
  std::vector<Rational> out(n);
  for (int i = 0; i < r; ++i)
    for (int u = 0; u < n; ++u)
      if (values_(i, u)) out[u] += coeffs[i] * values_(i, u);
  return out;
}

std::vector<Rational> project_dirac(const HyperRootCoordinates& coords, const RibbonPoint& u) {
  return DiracProjector(coords).project(u);
}

RibbonField essential_matrix(const FusionTable& t, int a) {
  if (a < 0 || a >= t.rank()) throw std::out_of_range("vertex out of range");
  RibbonField f(t);
  for (int m1 = 0; m1 < f.width1(); ++m1)
    for (int m2 = 0; m2 < f.width2(); ++m2) {
      const IntMatrix& m = is_su3(t) ? t.lookup(m1 + 1, m2 + 1) : t.lookup(m1 + 1);
      for (int b = 0; b < f.vertices(); ++b) f.at(m1, m2, b) = m(a, b);
    }
  return f;
}

RankCertificate certify_table_rank(const HyperRootCoordinates& coords) {
  RankCertificate cert;
  const FusionTable& t = coords.table();
  const auto& basis = coords.basis().elements;
  if (determinant(coords.gram()) == 0) return cert;
  cert.lower = int(basis.size());
  const auto ribbon = enumerate_ribbon(t);
  const int r = int(basis.size()), n = int(ribbon.size());
  IntMatrix rows(r, n);
  for (int i = 0; i < r; ++i)
    for (int v = 0; v < n; ++v) rows(i, v) = inner_product(t, basis[i], ribbon[v]);
  for (const auto& u : ribbon) {
    auto x = coords.express(u);
    for (int v = 0; v < n; ++v) {
      std::int64_t s = 0;
      for (int i = 0; i < r; ++i) s += x[i] * rows(i, v);
      if (s != inner_product(t, u, ribbon[v])) return cert;
    }
  }
  cert.spans = true;
  return cert;
}

}  // namespace hyperlattice
