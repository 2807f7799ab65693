#include "hyperlattice/qseries.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "hyperlattice/errors.hpp"
#include "hyperlattice/fixtures.hpp"

namespace hyperlattice {

QSeries::QSeries(ExponentUnit unit, int truncation) : unit_(unit), c_(std::size_t(std::max(truncation, 0)) + 1) {
  if (truncation < 0) throw std::invalid_argument("negative truncation");
}

QSeries::QSeries(ExponentUnit unit, int truncation, const std::vector<std::pair<int, BigInt>>& terms)
    : QSeries(unit, truncation) {
  for (const auto& [e, v] : terms)
    if (e >= 0 && e <= truncation) c_[e] += v;
}

void QSeries::require_same_unit(const QSeries& o) const {
  if (unit_ != o.unit_) throw std::invalid_argument("q-series exponent units differ");
}

QSeries QSeries::truncated(int t) const {
  QSeries r(unit_, std::min(t, truncation()));
  for (int e = 0; e <= r.truncation(); ++e) r.c_[e] = c_[e];
  return r;
}

QSeries QSeries::substitute(int m) const {
  if (m < 1) throw std::invalid_argument("substitution q -> q^m needs m >= 1");
  QSeries r(unit_, truncation() * m + (m - 1));
  for (int e = 0; e <= truncation(); ++e) r.c_[std::size_t(e) * m] = c_[e];
  return r;
}

QSeries QSeries::in_unit(ExponentUnit u) const {
  if (u == unit_) return *this;
  if (unit_ == ExponentUnit::Q2 && u == ExponentUnit::Q) {
    QSeries r = substitute(2);
    r.unit_ = ExponentUnit::Q;
    return r;
  }
  // Q -> Q2 keeps only even exponents, which must carry everything.
  QSeries r(ExponentUnit::Q2, truncation() / 2);
  for (int e = 0; e <= truncation(); ++e) {
    if (e % 2 && c_[e] != 0) throw FractionalExponent("odd q-exponent has no q2 form");
    if (e % 2 == 0) r.c_[e / 2] = c_[e];
  }
  return r;
}

QSeries QSeries::divided_exactly(const BigInt& d) const {
  QSeries r(*this);
  for (auto& v : r.c_) {
    if (v % d != 0) throw std::domain_error("coefficient not divisible");
    v /= d;
  }
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_unit(o);
  if (o.truncation() < truncation()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_same_unit(o);
  if (o.truncation() < truncation()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.require_same_unit(b);
  const int t = std::min(a.truncation(), b.truncation());
  QSeries r(a.unit_, t);
  for (int i = 0; i <= t; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= t; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

QSeries operator*(const BigInt& s, QSeries a) {
  for (auto& v : a.c_) v *= s;
  return a;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries r(unit_, truncation(), {{0, 1}});
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string QSeries::to_string() const {
  const char* q = unit_ == ExponentUnit::Q ? "q" : "q2";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= truncation(); ++e) {
    const BigInt& v = c_[e];
    if (v == 0) continue;
    BigInt mag = v < 0 ? BigInt(-v) : v;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e > 0) os << (e == 0 || mag != 1 ? " " : "") << q;
    if (e > 1) os << '^' << e;
  }
  if (first) os << '0';
  os << " + O(" << q << '^' << truncation() + 1 << ')';
  return os.str();
}

QSeries elliptic_theta(int which, int m, int truncation) {
  if (m < 1) throw std::invalid_argument("theta substitution needs m >= 1");
  QSeries r(ExponentUnit::Q, truncation);
  switch (which) {
    case 3:
    case 4:
      r[0] = 1;
      for (long n = 1; long(m) * n * n <= truncation; ++n) r[int(m * n * n)] += (which == 4 && n % 2) ? -2 : 2;
      break;
    case 2:
      if (m % 4 != 0)
        throw FractionalExponent("theta_2(0, q^" + std::to_string(m) + ") has fractional exponents");
      for (long n = 0; (m / 4) * (2 * n + 1) * (2 * n + 1) <= truncation; ++n)
        r[int((m / 4) * (2 * n + 1) * (2 * n + 1))] += 2;
      break;
    default:
      throw std::invalid_argument("elliptic_theta: which must be 2, 3 or 4");
  }
  return r;
}

namespace {

struct SeriesMeta {
  ExponentUnit unit;
  int exclusive_bound;  // printed as O(q^bound)
};

const std::map<std::string, SeriesMeta>& series_meta() {
  static const std::map<std::string, SeriesMeta> meta = {
      {"hexagonal", {ExponentUnit::Q, 34}},  {"theta_L1", {ExponentUnit::Q, 47}},
      {"theta_L2", {ExponentUnit::Q, 97}},   {"theta_L3", {ExponentUnit::Q, 119}},
      {"theta_L4", {ExponentUnit::Q, 31}},   {"theta_L5", {ExponentUnit::Q, 17}},
      {"theta_L6", {ExponentUnit::Q, 13}},   {"theta_D3", {ExponentUnit::Q, 21}},
      {"theta_D6", {ExponentUnit::Q, 21}},   {"theta_E5", {ExponentUnit::Q, 21}},
      {"theta_E9", {ExponentUnit::Q, 21}},   {"theta_E21", {ExponentUnit::Q, 9}},
      {"b1", {ExponentUnit::Q2, 24}},        {"b2", {ExponentUnit::Q2, 24}},
      {"b3", {ExponentUnit::Q2, 24}},        {"b4", {ExponentUnit::Q2, 24}},
      {"b5", {ExponentUnit::Q2, 24}},        {"b6", {ExponentUnit::Q2, 24}},
      {"b7", {ExponentUnit::Q2, 24}},
  };
  return meta;
}

}  // namespace

std::vector<std::string> reference_series_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : series_meta()) names.push_back(k);
  names.push_back("L1_D6plus");
  return names;
}

QSeries reference_series(const std::string& name) {
  if (name == "L1_D6plus") {
    const int t = 96;
    QSeries s = elliptic_theta(2, 4, t).pow(6) + elliptic_theta(3, 4, t).pow(6) + elliptic_theta(4, 4, t).pow(6);
    return s.divided_exactly(2);
  }
  auto it = series_meta().find(name);
  auto text = embedded_text("series/" + name);
  if (it == series_meta().end() || !text) throw NotShipped("unknown reference series '" + name + "'");
  IntMatrix rows = parse_matrix_text(*text);
  std::vector<std::pair<int, BigInt>> terms;
  for (int i = 0; i < rows.rows(); ++i) terms.push_back({int(rows(i, 0)), BigInt(rows(i, 1))});
  return QSeries(it->second.unit, it->second.exclusive_bound - 1, terms);
}

QSeries reference_series(const std::string& name, int truncation) {
  return reference_series(name).truncated(truncation);
}

}  // namespace hyperlattice
