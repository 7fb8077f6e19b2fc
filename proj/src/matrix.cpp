#include <bkr/error.hpp>
#include <bkr/matrix.hpp>

#include <string>

namespace bkr {

namespace {

std::string shape(const Mat& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// In-place Gauss-Jordan on m restricted to its first `pivot_cols` columns.
// Returns the pivot column of each pivot row, in row order.
std::vector<std::size_t> gauss_jordan(Mat& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (auto& x : m.row(r)) x *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      auto target = m.row(i);
      auto source = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j) target[j] -= f * source[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = row(a);
  auto rb = row(b);
  for (std::size_t j = 0; j < cols_; ++j) ra[j].swap(rb[j]);
}

Mat identity(std::size_t n) { return Mat::identity(n); }

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Vec mat_vec(const Mat& m, std::span<const Rational> x) {
  if (m.cols() != x.size()) {
    throw Error(Errc::DimensionMismatch, shape(m) + " times vector of length " + std::to_string(x.size()));
  }
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    const auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += r[j] * x[j];
    out[i] = acc;
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, shape(a) + " * " + shape(b));
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, shape(a) + " + " + shape(b));
  }
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Mat scale(const Rational& c, const Mat& a) {
  Mat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto& x : out.row(i)) x *= c;
  return out;
}

Mat kronecker(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Mat invert(const Mat& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "cannot invert a " + shape(a) + " matrix");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (gauss_jordan(aug, n).size() != n) throw Error(Errc::NotInvertible, "singular " + shape(a) + " matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Mat rref(const Mat& a) {
  Mat m = a;
  gauss_jordan(m, m.cols());
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> pivot_positions(const Mat& a_rref) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a_rref.rows(); ++i) {
    const auto r = a_rref.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (sgn(r[j]) != 0) {
        out.emplace_back(i, j);
        break;
      }
    }
  }
  return out;
}

std::size_t rank(const Mat& a) { return pivot_positions(rref(a)).size(); }

std::vector<std::size_t> rows_to_keep(const Mat& a) {
  std::vector<std::size_t> out;
  for (const auto& [row, col] : pivot_positions(rref(transpose(a)))) out.push_back(col);
  return out;
}

Mat take_rows(const Mat& a, std::span<const std::size_t> idx) {
  Mat out(idx.size(), a.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= a.rows()) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(idx[i]));
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(idx[i], j);
  }
  return out;
}

Mat take_cols(const Mat& a, std::span<const std::size_t> idx) {
  Mat out(a.rows(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= a.cols()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(idx[j]));
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, idx[j]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  return os << ']';
}

}  // namespace bkr
