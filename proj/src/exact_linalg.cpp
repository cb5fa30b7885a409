#include "ricsol/exact_linalg.hpp"

#include <algorithm>

namespace ricsol {

namespace {

// Row-scale a rational matrix to integers; row scaling preserves row space,
// rank, and nullspace.
Mat<BigInt> clear_denominators(const Mat<Rational>& a) {
  Mat<BigInt> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l(1);
    for (std::size_t j = 0; j < a.cols(); ++j)
      l = lcm(l, denominator(a(i, j)));
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
  }
  return m;
}

struct Echelon {
  Mat<BigInt> m;
  std::vector<std::size_t> pivot_cols;
};

// One-step fraction-free elimination. All intermediate entries are minors of
// the input, so they stay integral without gcd cleanups.
Echelon bareiss_echelon(Mat<BigInt> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  BigInt div_prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const BigInt pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt factor = m(i, c);
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = (m(i, j) * pivot - factor * m(r, j)) / div_prev;
    }
    div_prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace

ExactRref exact_rref(const Mat<Rational>& a) {
  Echelon e = bareiss_echelon(clear_denominators(a));
  const std::size_t rank = e.pivot_cols.size();
  const std::size_t cols = a.cols();

  // Normalize pivots to 1, then eliminate above them.
  Mat<Rational> r(a.rows(), cols);
  for (std::size_t i = 0; i < rank; ++i) {
    const Rational pivot(e.m(i, e.pivot_cols[i]));
    for (std::size_t j = 0; j < cols; ++j)
      r(i, j) = Rational(e.m(i, j)) / pivot;
  }
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t pc = e.pivot_cols[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = r(k, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) r(k, j) -= f * r(i, j);
    }
  }
  return {std::move(r), std::move(e.pivot_cols), rank};
}

std::size_t exact_rank(const Mat<Rational>& a) {
  return bareiss_echelon(clear_denominators(a)).pivot_cols.size();
}

std::vector<Vec<Rational>> exact_nullspace(const Mat<Rational>& a) {
  ExactRref r = exact_rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<Vec<Rational>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec<Rational> v(cols, Rational(0));
    v[free_c] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivot_cols[i]] = -r.rref(i, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec<Rational>> exact_solve(const Mat<Rational>& a, const Vec<Rational>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Mat<Rational> aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  ExactRref r = exact_rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == cols)
    return std::nullopt; // pivot in the augmented column
  Vec<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r.rank; ++i)
    x[r.pivot_cols[i]] = r.rref(i, cols);
  return x;
}

std::optional<Mat<Rational>> exact_invert(const Mat<Rational>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Mat<Rational> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  ExactRref r = exact_rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Mat<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

std::vector<Rational> leading_principal_minors(const Mat<Rational>& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Rational> minors;
  minors.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    // Direct Bareiss determinant of the leading k x k block; sizes here are
    // small enough that the k^4 total cost is irrelevant.
    Mat<Rational> blk(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) blk(i, j) = a(i, j);

    // Gaussian elimination with exact arithmetic, tracking the determinant.
    Rational det(1);
    bool singular = false;
    for (std::size_t c = 0; c < k && !singular; ++c) {
      std::size_t p = c;
      while (p < k && blk(p, c) == 0) ++p;
      if (p == k) {
        singular = true;
        break;
      }
      if (p != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(blk(p, j), blk(c, j));
        det = -det;
      }
      det *= blk(c, c);
      for (std::size_t i = c + 1; i < k; ++i) {
        const Rational f = blk(i, c) / blk(c, c);
        if (f == 0) continue;
        for (std::size_t j = c; j < k; ++j) blk(i, j) -= f * blk(c, j);
      }
    }
    minors.push_back(singular ? Rational(0) : det);
  }
  return minors;
}

} // namespace ricsol
