#pragma once

#include <vector>

#include "ncg/rational.hpp"

namespace ncg {

// Dense exact-rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }
  RationalMatrix(int rows, int cols, std::vector<Rat> entries);

  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  RationalMatrix transpose() const;
  Rat trace() const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_orthogonal() const;  // U^t U = I (square)

  // Bipartite connectivity of the nonzero pattern on rows u cols; square
  // matrices only. Equivalent to nonexistence of permutations C1, C2 with
  // C1 A C2 block-diagonal.
  bool is_irreducible() const;

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rat& s) const;
  bool operator==(const RationalMatrix& o) const = default;

  // Matrix power A^k, k >= 0 (square).
  RationalMatrix pow(int k) const;

  // Determinant by fraction-exact Gaussian elimination (square).
  Rat det() const;

  // A * v and v^t * A for a vector v.
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  std::vector<Rat> apply_left(const std::vector<Rat>& v) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace ncg
