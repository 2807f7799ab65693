#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlattice {

// Dense row-major integer matrix. Arithmetic throws std::overflow_error
// instead of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int n) { return IntMatrix(n, n); }
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  const std::int64_t* row(int i) const { return data_.data() + std::size_t(i) * cols_; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(std::int64_t s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix power(const IntMatrix& m, unsigned e);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Plain-text matrix format: one row per line, integers separated by
// whitespace, '#' starts a comment, blank lines ignored.
IntMatrix parse_matrix_text(const std::string& text);
std::vector<IntMatrix> parse_matrix_blocks(const std::string& text);
std::string format_matrix_text(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace hyperlattice
