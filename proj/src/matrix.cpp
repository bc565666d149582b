#include "ncg/matrix.hpp"

#include <functional>
#include <numeric>

namespace ncg {

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match matrix shape");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Rat RationalMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RationalMatrix::is_orthogonal() const {
  if (rows_ != cols_) return false;
  return transpose() * *this == identity(rows_);
}

bool RationalMatrix::is_irreducible() const {
  if (rows_ != cols_)
    throw std::invalid_argument("irreducibility requires a square matrix");
  const int n = rows_;
  if (n == 0) return true;
  // BFS on the bipartite graph: nodes 0..n-1 rows, n..2n-1 cols.
  std::vector<char> seen(static_cast<std::size_t>(2) * n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (v < n) {
      for (int j = 0; j < n; ++j)
        if (at(v, j) != 0 && !seen[n + j]) {
          seen[n + j] = 1;
          queue.push_back(n + j);
        }
    } else {
      for (int i = 0; i < n; ++i)
        if (at(i, v - n) != 0 && !seen[i]) {
          seen[i] = 1;
          queue.push_back(i);
        }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::operator*(const Rat& s) const {
  RationalMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

RationalMatrix RationalMatrix::pow(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  if (k < 0) throw std::invalid_argument("negative matrix power");
  RationalMatrix out = identity(rows_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rat RationalMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix m = *this;
  const int n = rows_;
  Rat d = 1;
  for (int i = 0; i < n; ++i) {
    int pivot = -1;
    for (int r = i; r < n; ++r)
      if (m.at(r, i) != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != i) {
      for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(pivot, c));
      d = -d;
    }
    d *= m.at(i, i);
    const Rat inv = Rat(1) / m.at(i, i);
    for (int r = i + 1; r < n; ++r) {
      if (m.at(r, i) == 0) continue;
      const Rat f = m.at(r, i) * inv;
      for (int c = i; c < n; ++c) m.at(r, c) -= f * m.at(i, c);
    }
  }
  return d;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector size mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Rat> RationalMatrix::apply_left(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("vector size mismatch");
  std::vector<Rat> out(cols_, Rat(0));
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) out[j] += v[i] * at(i, j);
  return out;
}

}  // namespace ncg
