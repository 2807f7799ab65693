#include "hyperlattice/fusion.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <regex>

#include "hyperlattice/errors.hpp"
#include "hyperlattice/fixtures.hpp"

namespace hyperlattice {

namespace {

int floor_div(int a, int n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }
int mod(int a, int n) { return ((a % n) + n) % n; }

const std::map<std::string, int> kSu3Levels = {
    {"A0", 0}, {"A1", 1}, {"A2", 2}, {"A3", 3}, {"A4", 4}, {"A5", 5}, {"A6", 6},
    {"D3", 3}, {"D6", 6}, {"E5", 5}, {"E9", 9}, {"E21", 21},
};

std::string available_list() {
  std::string s;
  for (const auto& n : shipped_su3_systems()) s += (s.empty() ? "" : ", ") + n;
  return s + ", su2.A<n>, su2.D<n>, su2.E6, su2.E7, su2.E8";
}

bool non_negative(const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

}  // namespace

std::vector<std::string> shipped_su3_systems() {
  return {"A0", "A1", "A2", "A3", "A4", "A5", "A6", "D3", "D6", "E5", "E9", "E21"};
}

std::vector<std::string> shipped_su2_examples() {
  return {"su2.A4", "su2.D5", "su2.E6", "su2.E7", "su2.E8"};
}

std::vector<int> compute_grading(const IntMatrix& m, int modulus) {
  const int n = m.rows();
  if (!m.square() || n == 0) throw Error("fundamental matrix must be square and non-empty");
  std::vector<int> t(n, -1);
  t[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b = 0; b < n; ++b) {
      if (m(a, b) && t[b] < 0) {
        t[b] = mod(t[a] + 1, modulus);
        queue.push_back(b);
      }
      if (m(b, a) && t[b] < 0) {
        t[b] = mod(t[a] - 1, modulus);
        queue.push_back(b);
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (t[a] < 0) throw Error("fusion graph is disconnected at vertex " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m(a, b) && t[b] != mod(t[a] + 1, modulus))
        throw Error("fusion graph admits no Z" + std::to_string(modulus) + " grading (arrow " +
                    std::to_string(a) + " -> " + std::to_string(b) + ")");
  return t;
}

IntMatrix su3_weight_graph(int k) {
  std::vector<std::pair<int, int>> w;
  std::map<std::pair<int, int>, int> index;
  for (int d = 0; d <= k; ++d)
    for (int q = 0; q <= d; ++q) {
      index[{d - q, q}] = int(w.size());
      w.push_back({d - q, q});
    }
  IntMatrix m(int(w.size()), int(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [p, q] = w[i];
    for (auto t : {std::pair{p + 1, q}, std::pair{p - 1, q + 1}, std::pair{p, q - 1}}) {
      auto it = index.find(t);
      if (it != index.end()) m(int(i), it->second) += 1;
    }
  }
  return m;
}

IntMatrix dynkin_adjacency(char type, int n) {
  IntMatrix m(n, n);
  auto link = [&](int a, int b) { m(a, b) = m(b, a) = 1; };
  switch (type) {
    case 'A':
      if (n < 1) throw Error("A_n needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw Error("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw Error("E_n needs n in 6..8");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(2, n - 1);
      break;
    default:
      throw Error(std::string("unknown Dynkin type ") + type);
  }
  return m;
}

FusionSystem make_fusion_system(Group group, const std::string& name, int level, IntMatrix fundamental) {
  FusionSystem s;
  s.group = group;
  s.name = name;
  s.level = level;
  s.N = level + (group == Group::SU3 ? 3 : 2);
  s.rank = fundamental.rows();
  s.fundamental = std::move(fundamental);
  s.grading = compute_grading(s.fundamental, s.grading_modulus());
  return s;
}

FusionSystem load_fusion_system(const std::string& requested) {
  std::string name = requested;
  if (name.size() >= 2 && name[0] == 'L' && std::isdigit(static_cast<unsigned char>(name[1]))) name[0] = 'A';

  static const std::regex su2_re(R"(su2\.([ADE])(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, su2_re)) {
    char type = m[1].str()[0];
    int n = std::stoi(m[2].str());
    int coxeter = 0;
    if (type == 'A' && n >= 1) coxeter = n + 1;
    if (type == 'D' && n >= 4) coxeter = 2 * n - 2;
    if (type == 'E' && n == 6) coxeter = 12;
    if (type == 'E' && n == 7) coxeter = 18;
    if (type == 'E' && n == 8) coxeter = 30;
    if (!coxeter) throw NotShipped("unknown system '" + requested + "'; available: " + available_list());
    return make_fusion_system(Group::SU2, name, coxeter - 2, dynkin_adjacency(type, n));
  }

  auto it = kSu3Levels.find(name);
  if (it == kSu3Levels.end())
    throw NotShipped("unknown system '" + requested + "'; available: " + available_list());
  IntMatrix f;
  if (auto pub = published_fusion_matrix(name))
    f = *pub;
  else
    f = su3_weight_graph(it->second);
  return make_fusion_system(Group::SU3, name, it->second, std::move(f));
}

FusionTable::FusionTable(FusionSystem system) : sys_(std::move(system)) {
  zero_ = IntMatrix::zero(sys_.rank);
  if (sys_.group == Group::SU3)
    build_su3();
  else
    build_su2();
}

void FusionTable::build_su3() {
  const int n = sys_.rank, k = sys_.level, N = sys_.N;
  const IntMatrix& f10 = sys_.fundamental;
  const IntMatrix f01 = f10.transpose();

  // Dynkin labels (p,q), degree p+q up to k+1; degree k+1 is the wall.
  std::map<std::pair<int, int>, IntMatrix> d;
  auto get = [&](int p, int q) -> const IntMatrix& {
    if (p < 0 || q < 0) return zero_;
    return d.at({p, q});
  };
  for (int deg = 0; deg <= k + 1; ++deg) {
    if (deg == 0) {
      d[{0, 0}] = IntMatrix::identity(n);
      continue;
    }
    for (int p = 1; p <= deg; ++p) {
      int q = deg - p;
      d[{p, q}] = f10 * get(p - 1, q) - get(p - 1, q - 1) - get(p - 2, q + 1);
    }
    d[{0, deg}] = d[{deg, 0}].transpose();
    // Second derivation through the conjugate recursion.
    for (int p = 0; p <= deg; ++p) {
      int q = deg - p;
      if (q == 0) continue;
      IntMatrix alt = f01 * get(p, q - 1) - get(p - 1, q - 1) - get(p + 1, q - 2);
      if (!(alt == d[{p, q}]))
        throw InternalConsistency(sys_.name + ": recursion gives two values for F(" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
    }
  }
  for (int p = 0; p <= k + 1; ++p)
    if (!d[{p, k + 1 - p}].is_zero())
      throw InternalConsistency(sys_.name + ": fusion matrix on the wall p+q = k+1 is nonzero at p = " +
                                std::to_string(p));

  alcove_.assign(std::size_t(N) * N, IntMatrix());
  for (int p = 1; p < N; ++p)
    for (int q = 1; p + q < N; ++q) {
      const IntMatrix& m = d.at({p - 1, q - 1});
      if (!non_negative(m))
        throw InternalConsistency(sys_.name + ": negative entry in alcove matrix");
      alcove_[std::size_t(p) * N + q] = m;
    }

  rotation_ = alcove(N - 2, 1);
  if (!(power(rotation_, 3) == IntMatrix::identity(n)))
    throw InternalConsistency(sys_.name + ": rotation P does not satisfy P^3 = 1");
  rotation_perm_.assign(n, -1);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (rotation_(c, b) == 1) rotation_perm_[b] = c;

  IntMatrix powers[3] = {IntMatrix::identity(n), rotation_, rotation_ * rotation_};
  extended_.assign(std::size_t(3) * N * N, IntMatrix());
  for (int e = 0; e < 3; ++e)
    for (int p0 = 0; p0 < N; ++p0)
      for (int q0 = 0; q0 < N; ++q0) {
        IntMatrix x;
        if (p0 == 0 || q0 == 0 || p0 + q0 == N)
          x = zero_;
        else if (p0 + q0 > N)
          x = -alcove(N - q0, N - p0);
        else
          x = alcove(p0, q0);
        extended_[slot(p0, q0, e)] = e ? powers[e] * x : x;
      }
}

void FusionTable::build_su2() {
  const int n = sys_.rank, N = sys_.N;
  const IntMatrix& g = sys_.fundamental;
  if (!g.is_symmetric()) throw Error(sys_.name + ": SU2 fusion graph must be undirected");
  std::vector<IntMatrix> f(N + 1);
  f[0] = zero_;
  f[1] = IntMatrix::identity(n);
  for (int m = 2; m <= N; ++m) f[m] = f[m - 1] * g - f[m - 2];
  if (!f[N].is_zero()) throw InternalConsistency(sys_.name + ": Chebyshev recursion does not vanish at N");
  alcove_.assign(N, IntMatrix());
  for (int m = 1; m < N; ++m) {
    if (!non_negative(f[m])) throw InternalConsistency(sys_.name + ": negative entry in alcove matrix");
    alcove_[m] = f[m];
  }
  extended_.assign(std::size_t(2) * N, IntMatrix());
  for (int m = 0; m < 2 * N; ++m) {
    if (m == 0 || m == N)
      extended_[m] = zero_;
    else if (m < N)
      extended_[m] = f[m];
    else
      extended_[m] = -f[2 * N - m];
  }
}

const IntMatrix& FusionTable::alcove(int p, int q) const {
  const int N = sys_.N;
  if (sys_.group != Group::SU3 || p < 1 || q < 1 || p + q >= N)
    throw std::out_of_range("alcove label outside 1 <= p,q, p+q <= N-1");
  return alcove_[std::size_t(p) * N + q];
}

const IntMatrix& FusionTable::lookup(int p, int q) const {
  const int N = sys_.N;
  int r1 = floor_div(p, N), r2 = floor_div(q, N);
  int e = mod(r1 + 2 * r2, 3);
  return extended_[slot(p - r1 * N, q - r2 * N, e)];
}

const IntMatrix& FusionTable::lookup(int m) const { return extended_[mod(m, 2 * sys_.N)]; }

FusionTable build_alcove(const FusionSystem& system) {
  if (system.group != Group::SU3) throw Error("build_alcove needs an SU3 system");
  return FusionTable(system);
}

FusionTable build_alcove_su2(const FusionSystem& system) {
  if (system.group != Group::SU2) throw Error("build_alcove_su2 needs an SU2 system");
  return FusionTable(system);
}

IntMatrix lookup_extended(const FusionTable& table, int p, int q) { return table.lookup(p, q); }

}  // namespace hyperlattice
