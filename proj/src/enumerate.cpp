#include "hyperlattice/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "hyperlattice/errors.hpp"
#include "hyperlattice/lattice.hpp"

namespace hyperlattice {

namespace {

constexpr double kSlack = 1e-9;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Cholesky data for the pruning bounds: x.A.x = sum_i q_i (x_i + sum_{j>i} mu_ij x_j)^2.
struct Prepared {
  int n = 0;
  IntMatrix a;
  std::vector<double> q;
  std::vector<std::vector<double>> mu;
};

Prepared prepare(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error("Gram matrix is not symmetric");
  if (!is_positive_definite(a)) throw NotPositiveDefinite("Gram matrix is not positive definite");
  Prepared p;
  p.n = a.rows();
  p.a = a;
  const int n = p.n;
  // Upper-triangular R with A = R^T R, computed in long double.
  std::vector<std::vector<long double>> r(n, std::vector<long double>(n, 0));
  for (int i = 0; i < n; ++i) {
    long double d = a(i, i);
    for (int k = 0; k < i; ++k) d -= r[k][i] * r[k][i];
    if (d <= 0) throw NotPositiveDefinite("Cholesky pivot is not positive");
    r[i][i] = std::sqrt(d);
    for (int j = i + 1; j < n; ++j) {
      long double s = a(i, j);
      for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      r[i][j] = s / r[i][i];
    }
  }
  p.q.resize(n);
  p.mu.assign(n, std::vector<double>(n, 0));
  for (int i = 0; i < n; ++i) {
    p.q[i] = double(r[i][i] * r[i][i]);
    for (int j = i + 1; j < n; ++j) p.mu[i][j] = double(r[i][j] / r[i][i]);
  }
  return p;
}

struct BudgetState {
  std::uint64_t budget;
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> exceeded{false};
};

// Depth-first enumeration of the half ball {x : x.A.x <= bound, top nonzero
// coordinate positive}. Leaves are whole runs of x_0 handed to the sink with
// exact integer data: norm(x_0) = q1 + x_0 (2 lin0 + a00 x_0).
template <class Sink>
class Engine {
 public:
  Engine(const Prepared& p, std::int64_t bound, Sink& sink, BudgetState& budget)
      : p_(p), bound_(bound), sink_(sink), budget_(budget) {}

  std::uint64_t run(int worker, int workers) {
    const int n = p_.n;
    if (n == 1) {
      leaf(0, 0, true);
      flush();
      return nodes_;
    }
    x_.assign(n, 0);
    c_.assign(n, 0);
    part_.assign(n, 0);
    qi_.assign(n, 0);
    hi_.assign(n, 0);
    zero_above_.assign(n, false);
    begin_.assign(n, n - 1);
    sig_.assign(n, std::vector<double>(n + 1, 0));
    lsig_.assign(n, std::vector<std::int64_t>(n + 1, 0));
    bound_f_ = double(bound_) * (1 + kSlack) + kSlack;

    int k = n - 1;
    zero_above_[k] = true;
    std::int64_t lo;
    range(k, lo, hi_[k]);
    x_[k] = lo + worker;
    const std::int64_t stride = workers;

    for (;;) {
      if (x_[k] > hi_[k]) {
        ++k;
        if (k == n) break;
        x_[k] += (k == n - 1) ? stride : 1;
        continue;
      }
      if ((++nodes_ & 0xFFF) == 0) check_budget();
      const std::int64_t xk = x_[k];
      const double y = double(xk) - c_[k];
      const double np = part_[k] + p_.q[k] * y * y;
      const std::int64_t lin = lsig_[k][k + 1];
      const std::int64_t qk = qi_[k] + xk * (2 * lin + p_.a(k, k) * xk);
      const bool za = zero_above_[k] && xk == 0;

      auto& srow = sig_[k - 1];
      auto& lrow = lsig_[k - 1];
      const std::int64_t* arow = p_.a.row(k - 1);
      const auto& murow = p_.mu[k - 1];
      for (int j = begin_[k]; j >= k; --j) {
        srow[j] = srow[j + 1] + murow[j] * double(x_[j]);
        lrow[j] = lrow[j + 1] + arow[j] * x_[j];
      }
      if (begin_[k] > begin_[k - 1]) begin_[k - 1] = begin_[k];
      begin_[k] = k;

      if (k == 1) {
        leaf(qk, lrow[1], za);
        ++x_[k];
        continue;
      }
      c_[k - 1] = -srow[k];
      part_[k - 1] = np;
      qi_[k - 1] = qk;
      zero_above_[k - 1] = za;
      --k;
      range(k, lo, hi_[k]);
      x_[k] = lo;
    }
    flush();
    return nodes_;
  }

 private:
  void range(int k, std::int64_t& lo, std::int64_t& hi) const {
    const double r = bound_f_ - part_[k];
    if (r < 0) {
      lo = 1;
      hi = 0;
      return;
    }
    const double rad = std::sqrt(r / p_.q[k]) * (1 + kSlack) + kSlack;
    lo = static_cast<std::int64_t>(std::ceil(c_[k] - rad));
    hi = static_cast<std::int64_t>(std::floor(c_[k] + rad));
    if (zero_above_[k] && lo < 0) lo = 0;
  }

  void leaf(std::int64_t q1, std::int64_t lin0, bool zero_above) {
    const std::int64_t a00 = p_.a(0, 0);
    const std::int64_t disc = lin0 * lin0 - a00 * (q1 - bound_);
    if (disc < 0) return;
    const std::int64_t s = isqrt(disc);
    std::int64_t lo = ceil_div(-lin0 - s, a00);
    const std::int64_t hi = floor_div(s - lin0, a00);
    if (zero_above && lo < 1) lo = 1;
    if (lo > hi) return;
    if (!x_.empty()) x_[0] = 0;
    sink_.leaf(x_, q1, lin0, a00, lo, hi);
  }

  void check_budget() {
    std::uint64_t t = budget_.total.fetch_add(nodes_ - reported_) + (nodes_ - reported_);
    reported_ = nodes_;
    if (t > budget_.budget || budget_.exceeded.load()) {
      budget_.exceeded = true;
      throw BudgetExceeded("enumeration node budget exceeded", t);
    }
  }

  void flush() {
    budget_.total.fetch_add(nodes_ - reported_);
    reported_ = nodes_;
    if (budget_.total.load() > budget_.budget) {
      budget_.exceeded = true;
      throw BudgetExceeded("enumeration node budget exceeded", budget_.total.load());
    }
  }

  const Prepared& p_;
  const std::int64_t bound_;
  double bound_f_ = 0;
  Sink& sink_;
  BudgetState& budget_;
  std::uint64_t nodes_ = 0, reported_ = 0;
  std::vector<std::int64_t> x_, qi_, hi_;
  std::vector<double> c_, part_;
  std::vector<bool> zero_above_;
  std::vector<int> begin_;
  std::vector<std::vector<double>> sig_;
  std::vector<std::vector<std::int64_t>> lsig_;
};

struct CountSink {
  std::vector<std::uint64_t> hist;
  void leaf(const std::vector<std::int64_t>&, std::int64_t q1, std::int64_t lin0, std::int64_t a00, std::int64_t lo,
            std::int64_t hi) {
    std::int64_t v = q1 + lo * (2 * lin0 + a00 * lo);
    std::int64_t d = 2 * lin0 + a00 * (2 * lo + 1);
    std::uint64_t* h = hist.data();
    for (std::int64_t x = lo; x <= hi; ++x) {
      ++h[v];
      v += d;
      d += 2 * a00;
    }
  }
};

struct VisitSink {
  std::int64_t min_norm;
  const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>* visit;
  std::vector<std::int64_t> buf;
  void leaf(const std::vector<std::int64_t>& x, std::int64_t q1, std::int64_t lin0, std::int64_t a00,
            std::int64_t lo, std::int64_t hi) {
    buf = x;
    if (buf.empty()) buf.assign(1, 0);
    for (std::int64_t x0 = lo; x0 <= hi; ++x0) {
      std::int64_t v = q1 + x0 * (2 * lin0 + a00 * x0);
      if (v < min_norm) continue;
      buf[0] = x0;
      (*visit)(buf, v);
    }
  }
};

template <class Sink>
std::uint64_t run_engine(const Prepared& p, std::int64_t bound, std::vector<Sink>& sinks, std::uint64_t budget) {
  BudgetState state{budget};
  const int workers = int(sinks.size());
  std::vector<std::uint64_t> nodes(workers, 0);
  if (workers == 1) {
    Engine<Sink> e(p, bound, sinks[0], state);
    nodes[0] = e.run(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          Engine<Sink> e(p, bound, sinks[w], state);
          nodes[w] = e.run(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
          state.exceeded = true;
        }
      });
    for (auto& t : pool) t.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }
  std::uint64_t total = 0;
  for (auto v : nodes) total += v;
  return total;
}

std::vector<std::int64_t> apply_transform(const IntMatrix& u, const std::vector<std::int64_t>& y) {
  std::vector<std::int64_t> x(u.rows(), 0);
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      if (y[j]) x[i] = checked_add(x[i], checked_mul(u(i, j), y[j]));
  return x;
}

void canonical_sign(std::vector<std::int64_t>& x) {
  for (auto v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& c : x) c = -c;
    return;
  }
}

ReducedGram reduced(const IntMatrix& gram, const EnumerationOptions& opts) {
  if (!gram.is_symmetric()) throw Error("Gram matrix is not symmetric");
  if (!is_positive_definite(gram)) throw NotPositiveDefinite("Gram matrix is not positive definite");
  if (opts.reduction <= 0) return {gram, IntMatrix::identity(gram.rows())};
  if (opts.reduction == 1) return lll_reduce(gram);
  return bkz_reduce(gram, opts.reduction);
}

}  // namespace

std::vector<std::pair<int, std::uint64_t>> ThetaSeries::nonzero() const {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (int i = 0; i < int(counts.size()); ++i)
    if (counts[i]) out.push_back({i, counts[i]});
  return out;
}

ThetaSeries theta_series(const IntMatrix& gram, int max_norm, const EnumerationOptions& opts) {
  if (max_norm < 0) throw Error("max_norm must be non-negative");
  if (gram.rows() == 0) throw Error("empty Gram matrix");
  IntMatrix a = reduced(gram, opts).gram;
  Prepared p = prepare(a);
  const int workers = std::max(1, opts.threads);
  std::vector<CountSink> sinks(workers);
  // Room for the largest norm an accepted run can touch before the bound.
  for (auto& s : sinks) s.hist.assign(std::size_t(max_norm) + 1, 0);
  ThetaSeries t;
  t.max_norm = max_norm;
  t.nodes = run_engine(p, max_norm, sinks, opts.node_budget);
  t.counts.assign(std::size_t(max_norm) + 1, 0);
  for (const auto& s : sinks)
    for (int i = 0; i <= max_norm; ++i) t.counts[i] += s.hist[i];
  for (int i = 1; i <= max_norm; ++i) t.counts[i] *= 2;
  t.counts[0] = 1;
  return t;
}

std::uint64_t visit_short_vectors(const IntMatrix& gram, int max_norm,
                                  const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit,
                                  const EnumerationOptions& opts) {
  if (max_norm <= 0) return 0;
  ReducedGram red = reduced(gram, opts);
  Prepared p = prepare(red.gram);
  std::function<void(const std::vector<std::int64_t>&, std::int64_t)> mapped =
      [&](const std::vector<std::int64_t>& y, std::int64_t norm) {
        auto x = apply_transform(red.transform, y);
        canonical_sign(x);
        visit(x, norm);
      };
  std::vector<VisitSink> sinks{VisitSink{1, &mapped, {}}};
  return run_engine(p, max_norm, sinks, opts.node_budget);
}

std::vector<Shell> shells(const IntMatrix& gram, int max_norm, const EnumerationOptions& opts) {
  std::vector<Shell> out;
  std::vector<std::vector<std::vector<std::int64_t>>> by_norm(std::max(0, max_norm) + 1);
  visit_short_vectors(
      gram, max_norm,
      [&](const std::vector<std::int64_t>& x, std::int64_t norm) { by_norm[norm].push_back(x); }, opts);
  for (int k = 1; k <= max_norm; ++k) {
    if (by_norm[k].empty()) continue;
    std::sort(by_norm[k].begin(), by_norm[k].end());
    out.push_back({k, std::move(by_norm[k])});
  }
  return out;
}

ThetaSeries box_theta_series(const IntMatrix& gram, int max_norm) {
  if (max_norm < 0) throw Error("max_norm must be non-negative");
  if (!is_positive_definite(gram)) throw NotPositiveDefinite("Gram matrix is not positive definite");
  const int n = gram.rows();
  const RationalMatrix inv = inverse(gram);
  std::vector<std::int64_t> bound(n);
  for (int i = 0; i < n; ++i) {
    // largest t with t^2 <= max_norm * inv_ii
    const Rational lim = Rational(max_norm) * inv[i][i];
    std::int64_t t = 0;
    while (Rational((t + 1) * (t + 1)) <= lim) ++t;
    bound[i] = t;
  }
  ThetaSeries out;
  out.max_norm = max_norm;
  out.counts.assign(std::size_t(max_norm) + 1, 0);
  std::vector<std::int64_t> x(n);
  for (int i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    ++out.nodes;
    const std::int64_t v = quadratic_form(gram, x);
    if (v <= max_norm) ++out.counts[v];
    int i = 0;
    while (i < n && x[i] == bound[i]) {
      x[i] = -bound[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

Shell shell(const IntMatrix& gram, int norm, const EnumerationOptions& opts) {
  Shell s;
  s.norm = norm;
  if (norm <= 0) return s;
  visit_short_vectors(
      gram, norm,
      [&](const std::vector<std::int64_t>& x, std::int64_t v) {
        if (v == norm) s.vectors.push_back(x);
      },
      opts);
  std::sort(s.vectors.begin(), s.vectors.end());
  return s;
}

namespace {

std::set<std::vector<std::int64_t>> canonical_roots(const HyperRootCoordinates& coords) {
  std::set<std::vector<std::int64_t>> roots;
  for (const auto& p : enumerate_ribbon(coords.table())) {
    auto x = coords.express(p);
    canonical_sign(x);
    roots.insert(std::move(x));
  }
  return roots;
}

}  // namespace

KissingData kissing_data(const HyperRootCoordinates& coords, const EnumerationOptions& opts) {
  const IntMatrix& a = coords.gram();
  int min_diag = int(a(0, 0));
  for (int i = 0; i < a.rows(); ++i) min_diag = std::min<int>(min_diag, int(a(i, i)));
  ThetaSeries t = theta_series(a, min_diag, opts);
  KissingData k;
  for (int v = 1; v <= min_diag; ++v)
    if (t.at(v)) {
      k.min_norm = v;
      k.kissing_number = t.at(v);
      break;
    }
  Shell s = shell(a, k.min_norm, opts);
  auto roots = canonical_roots(coords);
  std::set<std::vector<std::int64_t>> mins(s.vectors.begin(), s.vectors.end());
  k.min_vectors_are_hyperroots = mins == roots;
  IntMatrix m(int(s.vectors.size()), a.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = s.vectors[i][j];
  k.span_dim_of_min_shell = m.rows() ? exact_rank(m) : 0;
  return k;
}

ShellDecomposition shell_decomposition(const HyperRootCoordinates& coords, int norm, const EnumerationOptions& opts) {
  ShellDecomposition d;
  d.norm = norm;
  auto roots = canonical_roots(coords);
  Shell s = shell(coords.gram(), norm, opts);
  d.total = 2 * s.vectors.size();
  for (const auto& v : s.vectors)
    if (roots.count(v)) d.hyperroot_count += 2;
  d.other_count = d.total - d.hyperroot_count;
  return d;
}

}  // namespace hyperlattice
