#pragma once

#include "cyclic/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cyclic {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transposed() const;
  RationalVector multiply(const RationalVector& x) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form, pivoting on the leftmost available column.
EchelonForm reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

/// Null-space basis read off the reduced echelon form: one vector per free column,
/// with a 1 in that column and zeros in the other free columns.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Solves the square system m·x = rhs; empty optional when m is singular.
std::optional<RationalVector> solve_square(const RationalMatrix& m, const RationalVector& rhs);

}  // namespace cyclic
