#include "hyperlattice/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "hyperlattice/errors.hpp"

namespace hyperlattice {

namespace {

// Basis held as an exact Gram matrix plus the transform that produced it,
// with a floating Gram-Schmidt view rebuilt on demand.
class GramBasis {
 public:
  explicit GramBasis(const IntMatrix& a) : orig_(a), g_(a), u_(IntMatrix::identity(a.rows())), n_(a.rows()) {
    mu_.assign(n_, std::vector<long double>(n_, 0));
    bstar_.assign(n_, 0);
  }

  int size() const { return n_; }
  const std::vector<long double>& bstar() const { return bstar_; }
  long double mu(int i, int j) const { return mu_[i][j]; }

  void gso(int from = 0) {
    for (int i = from; i < n_; ++i) {
      for (int j = 0; j < i; ++j) {
        long double s = g_(i, j);
        for (int k = 0; k < j; ++k) s -= mu_[j][k] * mu_[i][k] * bstar_[k];
        mu_[i][j] = s / bstar_[j];
      }
      long double s = g_(i, i);
      for (int k = 0; k < i; ++k) s -= mu_[i][k] * mu_[i][k] * bstar_[k];
      if (s <= 0) throw NotPositiveDefinite("Gram-Schmidt norm is not positive during reduction");
      bstar_[i] = s;
    }
  }

  // b_k += q b_j
  void add(int k, int j, std::int64_t q) {
    if (!q) return;
    for (int t = 0; t < n_; ++t) g_(k, t) = checked_add(g_(k, t), checked_mul(q, g_(j, t)));
    for (int t = 0; t < n_; ++t) g_(t, k) = checked_add(g_(t, k), checked_mul(q, g_(t, j)));
    for (int t = 0; t < n_; ++t) u_(t, k) = checked_add(u_(t, k), checked_mul(q, u_(t, j)));
  }

  void swap(int a, int b) {
    if (a == b) return;
    for (int t = 0; t < n_; ++t) std::swap(g_(a, t), g_(b, t));
    for (int t = 0; t < n_; ++t) std::swap(g_(t, a), g_(t, b));
    for (int t = 0; t < n_; ++t) std::swap(u_(t, a), u_(t, b));
  }

  void negate(int k) {
    for (int t = 0; t < n_; ++t) g_(k, t) = -g_(k, t);
    for (int t = 0; t < n_; ++t) g_(t, k) = -g_(t, k);
    for (int t = 0; t < n_; ++t) u_(t, k) = -u_(t, k);
  }

  void lll(long double delta, int from = 1) {
    gso();
    int k = std::max(from, 1);
    std::uint64_t steps = 0;
    while (k < n_) {
      if (++steps > 10'000'000) throw InternalConsistency("LLL reduction did not terminate");
      bool changed = false;
      for (int j = k - 1; j >= 0; --j) {
        long double m = mu_[k][j];
        if (std::fabs(m) > 0.51L) {
          auto q = static_cast<std::int64_t>(std::llround(m));
          add(k, j, -q);
          for (int t = 0; t < j; ++t) mu_[k][t] -= q * mu_[j][t];
          mu_[k][j] -= q;
          changed = true;
        }
      }
      if (changed) gso(k);
      if (bstar_[k] < (delta - mu_[k][k - 1] * mu_[k][k - 1]) * bstar_[k - 1]) {
        swap(k, k - 1);
        gso(k - 1);
        k = std::max(k - 1, 1);
      } else {
        ++k;
      }
    }
  }

  // Shortest nonzero vector of the projection of b_k..b_{h-1} orthogonally
  // to b_0..b_{k-1}, if shorter than bound. Coefficients relative to b_k.
  bool block_svp(int k, int h, long double bound, std::vector<std::int64_t>& best) const {
    const int m = h - k;
    std::vector<std::int64_t> x(m, 0);
    std::vector<long double> c(m, 0), part(m + 1, 0);
    bool found = false;
    long double radius = bound;
    std::uint64_t nodes = 0;
    // Recursive Schnorr-Euchner style search with a shrinking radius.
    auto rec = [&](auto&& self, int i, bool zero_above) -> void {
      if (++nodes > 50'000'000) return;
      long double center = 0;
      for (int j = i + 1; j < m; ++j) center -= mu_[k + j][k + i] * x[j];
      const long double rem = radius - part[i + 1];
      if (rem <= 0) return;
      const long double rad = std::sqrt(rem / bstar_[k + i]);
      std::int64_t lo = static_cast<std::int64_t>(std::ceil(center - rad));
      std::int64_t hi = static_cast<std::int64_t>(std::floor(center + rad));
      if (zero_above) lo = std::max<std::int64_t>(lo, 0);
      for (std::int64_t v = lo; v <= hi; ++v) {
        long double y = v - center;
        long double p = part[i + 1] + bstar_[k + i] * y * y;
        if (p >= radius) continue;
        x[i] = v;
        part[i] = p;
        const bool za = zero_above && v == 0;
        if (i == 0) {
          if (!za && p < radius - 1e-9L) {
            radius = p;
            best = x;
            found = true;
          }
        } else {
          self(self, i - 1, za);
        }
      }
      x[i] = 0;
    };
    rec(rec, m - 1, true);
    return found;
  }

  // Make b_k the combination sum v_i b_{k+i} (v primitive) by unimodular
  // column operations inside the block.
  void insert(int k, std::vector<std::int64_t> v) {
    const int m = int(v.size());
    for (;;) {
      int piv = -1, nonzero = 0;
      for (int i = 0; i < m; ++i)
        if (v[i]) {
          ++nonzero;
          if (piv < 0 || std::llabs(v[i]) < std::llabs(v[piv])) piv = i;
        }
      if (nonzero <= 1) {
        if (std::llabs(v[piv]) != 1) throw InternalConsistency("inserted vector is not primitive");
        if (v[piv] < 0) negate(k + piv);
        for (int i = piv; i > 0; --i) swap(k + i, k + i - 1);
        return;
      }
      for (int j = 0; j < m; ++j) {
        if (j == piv || !v[j]) continue;
        std::int64_t q = v[j] / v[piv];
        v[j] -= q * v[piv];
        add(k + piv, k + j, q);
      }
    }
  }

  ReducedGram result() const {
    if (!(u_.transpose() * orig_ * u_ == g_)) throw InternalConsistency("reduction transform is inconsistent");
    return {g_, u_};
  }

 private:
  IntMatrix orig_, g_, u_;
  int n_;
  std::vector<std::vector<long double>> mu_;
  std::vector<long double> bstar_;
};

}  // namespace

ReducedGram lll_reduce(const IntMatrix& gram, double delta) {
  GramBasis b(gram);
  if (b.size() > 1) b.lll(delta);
  return b.result();
}

ReducedGram bkz_reduce(const IntMatrix& gram, int block_size, int max_tours) {
  GramBasis b(gram);
  const int n = b.size();
  if (n < 2) return b.result();
  const long double delta = 0.99L;
  b.lll(delta);
  if (block_size < 2) return b.result();
  for (int tour = 0; tour < max_tours; ++tour) {
    bool improved = false;
    for (int k = 0; k + 1 < n; ++k) {
      const int h = std::min(k + block_size, n);
      std::vector<std::int64_t> v;
      if (!b.block_svp(k, h, b.bstar()[k] * 0.999L, v)) continue;
      b.insert(k, v);
      b.lll(delta, k == 0 ? 1 : k);
      improved = true;
    }
    if (!improved) break;
  }
  return b.result();
}

}  // namespace hyperlattice
