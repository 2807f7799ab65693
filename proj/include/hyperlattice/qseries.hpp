#pragma once

#include <string>
#include <vector>

#include "hyperlattice/lattice.hpp"

namespace hyperlattice {

// q2 = q^2; theta coefficients indexed by the norm x.A.x use unit Q.
enum class ExponentUnit { Q, Q2 };

// Truncated power series: coefficients are exact for exponents 0..truncation.
class QSeries {
 public:
  QSeries(ExponentUnit unit, int truncation);
  QSeries(ExponentUnit unit, int truncation, const std::vector<std::pair<int, BigInt>>& terms);

  ExponentUnit unit() const { return unit_; }
  int truncation() const { return int(c_.size()) - 1; }
  const BigInt& operator[](int e) const { return c_.at(e); }
  BigInt& operator[](int e) { return c_.at(e); }
  BigInt coefficient(int e) const { return e >= 0 && e <= truncation() ? c_[e] : BigInt(0); }

  QSeries truncated(int t) const;
  // q -> q^m; the truncation scales with m.
  QSeries substitute(int m) const;
  // Same series expressed in another unit (Q2 -> Q doubles exponents).
  QSeries in_unit(ExponentUnit u) const;
  QSeries divided_exactly(const BigInt& d) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const BigInt& s, QSeries a);
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.unit_ == b.unit_ && a.c_ == b.c_; }

  QSeries pow(unsigned e) const;

  // "1 + 32 q^6 + 60 q^8 + O(q^47)"
  std::string to_string() const;

 private:
  void require_same_unit(const QSeries& o) const;
  ExponentUnit unit_;
  std::vector<BigInt> c_;
};

// theta_3(0, q^m) = 1 + 2 sum q^{m n^2}, theta_4 with signs (-1)^n,
// theta_2(0, q^m) = 2 sum_{n >= 0} q^{m (n + 1/2)^2}, which needs 4 | m.
QSeries elliptic_theta(int which, int m, int truncation);

// Embedded fixtures: hexagonal, b1..b7, theta_L1 .. theta_E21, and
// L1_D6plus (the half-sum of sixth powers of theta functions at q^4).
QSeries reference_series(const std::string& name);
QSeries reference_series(const std::string& name, int truncation);
std::vector<std::string> reference_series_names();

}  // namespace hyperlattice
