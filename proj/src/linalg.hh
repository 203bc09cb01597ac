#ifndef GORB_LINALG_HH
#define GORB_LINALG_HH

#include "scalar.hh"

#include <cstddef>
#include <vector>

namespace gorb {

// Minimal dense exact-arithmetic matrix toolkit. Sizes in this project are
// tiny (tens of rows), so plain Gaussian elimination over the field and
// fraction-free (Bareiss) elimination over the integers are plenty.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0)))
        return false;
    return true;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xv = x(r, k);
        if (xv == T(0))
          continue;
        for (std::size_t c = 0; c < y.cols_; ++c)
          out(r, c) = out(r, c) + xv * y(k, c);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.data_.size(); ++i)
      out.data_[i] = x.data_[i] + y.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.data_.size(); ++i)
      out.data_[i] = x.data_[i] - y.data_[i];
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out(c, r) = (*this)(r, c);
    return out;
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      out(i, i) = T(1);
    return out;
  }

  Matrix scaled(const T& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = data_[i] * s;
    return out;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;
using QuarticMatrix = Matrix<Quartic>;

// Rank by exact Gaussian elimination over the rationals.
std::size_t rank(RatMatrix a);

// Rank by fraction-free elimination over the integers.
std::size_t rank(IntMatrix a);

// Basis of the right null space { x : a x = 0 }, columns of the result.
RatMatrix kernel_basis(RatMatrix a);

// Solve a x = b for square invertible a.
RatMatrix solve(RatMatrix a, RatMatrix b);

RatMatrix inverse(const RatMatrix& a);

} // namespace gorb

#endif
