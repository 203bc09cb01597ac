#include "linalg.hh"

#include <stdexcept>

namespace gorb {

namespace {

// Row-echelon reduction over the rationals; returns pivot columns.
std::vector<std::size_t> reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0)
      ++p;
    if (p == a.rows())
      continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(p, c), a(row, c));
    Rat inv = Rat(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0)
        continue;
      Rat f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rank(RatMatrix a) { return reduce(a).size(); }

std::size_t rank(IntMatrix a) {
  // Bareiss fraction-free elimination.
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col) == 0)
      ++p;
    if (p == a.rows())
      continue;
    if (p != r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(p, c), a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t c = col + 1; c < a.cols(); ++c)
        a(i, c) = (a(r, col) * a(i, c) - a(i, col) * a(r, c)) / prev;
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

RatMatrix kernel_basis(RatMatrix a) {
  std::size_t n = a.cols();
  std::vector<std::size_t> pivots = reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  RatMatrix out(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    out(fc, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out(pivots[r], k) = -a(r, fc);
  }
  return out;
}

RatMatrix solve(RatMatrix a, RatMatrix b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve: shape mismatch");
  std::size_t n = a.rows();
  RatMatrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      aug(r, n + c) = b(r, c);
  }
  std::vector<std::size_t> pivots = reduce(aug);
  if (pivots.size() != n)
    throw std::domain_error("solve: singular matrix");
  RatMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      x(r, c) = aug(r, n + c);
  return x;
}

RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

} // namespace gorb
