#pragma once

#include <bkr/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace bkr {

using Vec = std::vector<Rational>;

/// Dense row-major rational matrix. Shapes with a zero dimension (0x0, 0xn,
/// nx0) are ordinary values.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row lists; all rows must have equal length.
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat identity(std::size_t n);
Mat transpose(const Mat& a);
Vec mat_vec(const Mat& m, std::span<const Rational> x);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat scale(const Rational& c, const Mat& a);

/// Block (i, j) of the result is a(i, j) * b; entry (i*rows(b)+k, j*cols(b)+l)
/// equals a(i, j) * b(k, l).
Mat kronecker(const Mat& a, const Mat& b);

/// Gauss-Jordan inverse. A 0x0 matrix is its own inverse.
Mat invert(const Mat& a);

/// Reduced row echelon form. Pivots are the first nonzero entry in column
/// order, rows kept in the order they are found.
Mat rref(const Mat& a);

/// (row, col) of the leading entry of each nonzero row of a matrix in RREF.
std::vector<std::pair<std::size_t, std::size_t>> pivot_positions(const Mat& a_rref);

std::size_t rank(const Mat& a);

/// Indices of a basis among the rows of a: the pivot columns of rref(a^T).
/// Sorted ascending.
std::vector<std::size_t> rows_to_keep(const Mat& a);

Mat take_rows(const Mat& a, std::span<const std::size_t> idx);
Mat take_cols(const Mat& a, std::span<const std::size_t> idx);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace bkr
