#include "hyperlattice/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hyperlattice/errors.hpp"

namespace hyperlattice {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix product");
  return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i].assign(row(i), row(i) + cols_);
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(*this);
  for (auto& v : r.data_) v = checked_mul(v, -1);
  return r;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_add(data_[i], o.data_[i]);
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_add(data_[i], -o.data_[i]);
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      std::int64_t x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(x, b(k, j)));
    }
  return r;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix r(a);
  for (auto& v : r.data_) v = checked_mul(v, s);
  return r;
}

IntMatrix power(const IntMatrix& m, unsigned e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

namespace {

std::vector<std::int64_t> parse_row(const std::string& line, int lineno) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::int64_t> row;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    row.push_back(v);
  }
  return row;
}

}  // namespace

std::vector<IntMatrix> parse_matrix_blocks(const std::string& text) {
  std::vector<IntMatrix> out;
  std::vector<std::vector<std::int64_t>> rows;
  auto flush = [&] {
    if (rows.empty()) return;
    for (const auto& r : rows)
      if (r.size() != rows[0].size()) throw ParseError("rows of unequal length");
    out.push_back(IntMatrix::from_rows(rows));
    rows.clear();
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool comment_only = line.find_first_not_of(" \t\r") != std::string::npos &&
                        line[line.find_first_not_of(" \t\r")] == '#';
    auto row = parse_row(line, lineno);
    if (row.empty()) {
      if (!comment_only) flush();
      continue;
    }
    rows.push_back(std::move(row));
  }
  flush();
  return out;
}

IntMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto row = parse_row(line, lineno);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError("rows of unequal length");
  return IntMatrix::from_rows(rows);
}

std::string format_matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << format_matrix_text(m); }

}  // namespace hyperlattice
