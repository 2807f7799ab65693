#include "hyperlattice/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "hyperlattice/errors.hpp"

namespace hyperlattice {

namespace mp = boost::multiprecision;

BigMatrix to_big(const IntMatrix& a) {
  BigMatrix m(a.rows(), std::vector<BigInt>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  return determinant(to_big(a));
}

BigInt determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t i = k + 1;
      while (i < n && a[i][k] == 0) ++i;
      if (i == n) return 0;
      std::swap(a[i], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int exact_rank(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  BigInt prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RationalMatrix inverse(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("matrix is singular");
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (int j = c; j < 2 * n; ++j) a[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

ScaledInverse scaled_inverse(const IntMatrix& m) {
  RationalMatrix inv = inverse(m);
  BigInt d = 1;
  for (const auto& row : inv)
    for (const auto& x : row) d = mp::lcm(d, mp::denominator(x));
  if (d > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("inverse denominator exceeds 64 bits");
  ScaledInverse s;
  s.denominator = static_cast<std::int64_t>(d);
  s.numerator = IntMatrix(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Rational v = inv[i][j] * d;
      BigInt num = mp::numerator(v);
      if (num > BigInt(std::numeric_limits<std::int64_t>::max()) ||
          num < BigInt(std::numeric_limits<std::int64_t>::min()))
        throw std::overflow_error("scaled inverse entry exceeds 64 bits");
      s.numerator(i, j) = static_cast<std::int64_t>(num);
    }
  return s;
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
  RationalMatrix a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("linear system is singular");
    std::swap(a[piv], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::vector<Rational> solve(const IntMatrix& m, const std::vector<Rational>& b) {
  RationalMatrix a(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return solve(a, b);
}

std::optional<std::vector<Rational>> rational_cholesky_pivots(const IntMatrix& m) {
  if (!m.is_symmetric()) return std::nullopt;
  // Bareiss without pivoting: the k-th pivot is the k-th leading minor, and
  // the LDL^T pivot is the ratio of consecutive minors.
  BigMatrix a = to_big(m);
  const std::size_t n = a.size();
  std::vector<Rational> pivots;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return std::nullopt;
    pivots.push_back(Rational(a[k][k], prev));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return pivots;
}

bool is_positive_definite(const IntMatrix& a) { return rational_cholesky_pivots(a).has_value(); }

std::vector<BigInt> smith_diagonal(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const int rows = m.rows(), cols = m.cols();
  const int r = std::min(rows, cols);
  std::vector<BigInt> diag;
  for (int t = 0; t < r; ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi < 0 || mp::abs(a[i][j]) < mp::abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) {
        for (int s = t; s < r; ++s) diag.push_back(0);
        return diag;
      }
      std::swap(a[bi], a[t]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][t]);
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(mp::abs(a[t][t]));
  }
  return diag;
}

bool is_even_integral(const RationalMatrix& m, const BigInt& scale) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      Rational v = m[i][j] * scale;
      if (mp::denominator(v) != 1) return false;
      if (i == j && mp::numerator(v) % 2 != 0) return false;
    }
  return true;
}

BigInt modular_level(const IntMatrix& a) {
  RationalMatrix inv = inverse(a);
  BigInt d = 1;
  for (const auto& row : inv)
    for (const auto& x : row) d = mp::lcm(d, mp::denominator(x));
  // Integrality forces a multiple of d; twice d always has an even diagonal.
  return is_even_integral(inv, d) ? d : BigInt(2 * d);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre_symbol needs an odd prime");
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  BigInt e = mp::powm(r, BigInt((p - 1) / 2), BigInt(p));
  return e == 1 ? 1 : -1;
}

LatticeInvariants invariants(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error("Gram matrix is not symmetric");
  if (!is_positive_definite(a)) throw NotPositiveDefinite("Gram matrix is not positive definite");
  for (int i = 0; i < a.rows(); ++i)
    if (a(i, i) % 2) throw Error("Gram matrix is not even");
  LatticeInvariants inv;
  inv.rank = a.rows();
  inv.discriminant = determinant(a);
  inv.level = modular_level(a);
  inv.weight = a.rows() / 2;
  for (const auto& d : smith_diagonal(a))
    if (d > 1) inv.dual_quotient.push_back(d);
  for (std::int64_t p = 3; inv.legendre_profile.size() < 10; p += 2) {
    if (!is_prime(p) || inv.level % p == 0) continue;
    inv.legendre_profile.push_back({p, legendre_symbol(inv.discriminant, p)});
  }
  return inv;
}

IntMatrix apply_signed_permutation(const IntMatrix& a, const SignedPermutation& s) {
  const int n = a.rows();
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = s.sign[i] * s.sign[j] * a(s.perm[i], s.perm[j]);
  return b;
}

namespace {

using RowKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::vector<std::int64_t>>;

std::vector<RowKey> row_keys(const IntMatrix& a) {
  IntMatrix a2 = a * a;
  IntMatrix a3 = a2 * a;
  IntMatrix a4 = a2 * a2;
  std::vector<RowKey> keys;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 0; j < a.cols(); ++j) row.push_back(std::llabs(a(i, j)));
    std::sort(row.begin(), row.end());
    keys.emplace_back(a(i, i), a3(i, i), a4(i, i), std::move(row));
  }
  return keys;
}

struct SearchBudgetHit {};

}  // namespace

EquivalenceResult signed_perm_equivalent(const IntMatrix& a, const IntMatrix& b, std::uint64_t node_budget) {
  EquivalenceResult res;
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    res.status = Equivalence::NotEquivalent;
    return res;
  }
  const int n = a.rows();
  if (mp::abs(determinant(a)) != mp::abs(determinant(b))) {
    res.status = Equivalence::NotEquivalent;
    return res;
  }
  auto ka = row_keys(a), kb = row_keys(b);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      res.status = Equivalence::NotEquivalent;
      return res;
    }
  }
  std::map<RowKey, int> class_size;
  for (const auto& k : kb) class_size[k]++;

  // Visit B's rows breadth-first along nonzero entries so that every row
  // after a component root meets an already placed row, fixing its sign.
  std::vector<int> order, parent(n, -1);
  std::vector<bool> seen(n, false);
  while (int(order.size()) < n) {
    int root = -1;
    for (int i = 0; i < n; ++i)
      if (!seen[i] && (root < 0 || class_size[kb[i]] < class_size[kb[root]])) root = i;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      int u = order[head++];
      std::vector<int> next;
      for (int v = 0; v < n; ++v)
        if (!seen[v] && b(u, v) != 0) next.push_back(v);
      std::sort(next.begin(), next.end(), [&](int x, int y) { return class_size[kb[x]] < class_size[kb[y]]; });
      for (int v : next) {
        seen[v] = true;
        parent[v] = u;
        order.push_back(v);
      }
    }
  }

  std::vector<int> perm(n, -1), sign(n, 0);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;

  auto consistent = [&](int depth, int i, int j, int s) {
    for (int e = 0; e < depth; ++e) {
      int i2 = order[e];
      if (b(i, i2) != s * sign[i2] * a(j, perm[i2])) return false;
    }
    return b(i, i) == a(j, j);
  };

  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (++nodes > node_budget) throw SearchBudgetHit{};
    if (depth == n) return true;
    int i = order[depth];
    for (int j = 0; j < n; ++j) {
      if (used[j] || ka[j] != kb[i]) continue;
      int s = 1;
      if (parent[i] >= 0) {
        std::int64_t av = a(j, perm[parent[i]]);
        std::int64_t bv = b(i, parent[i]);
        if (av == 0) continue;
        std::int64_t prod = sign[parent[i]] * av;
        if (bv == prod)
          s = 1;
        else if (bv == -prod)
          s = -1;
        else
          continue;
      }
      if (!consistent(depth, i, j, s)) continue;
      perm[i] = j;
      sign[i] = s;
      used[j] = true;
      if (rec(depth + 1)) return true;
      used[j] = false;
      perm[i] = -1;
    }
    return false;
  };

  try {
    bool found = rec(0);
    res.nodes = nodes;
    if (found) {
      res.status = Equivalence::Equivalent;
      res.witness = SignedPermutation{perm, sign};
    } else {
      res.status = Equivalence::NotEquivalent;
    }
  } catch (const SearchBudgetHit&) {
    res.nodes = nodes;
    res.status = Equivalence::Inconclusive;
  }
  return res;
}

}  // namespace hyperlattice
