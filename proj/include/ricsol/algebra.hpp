#pragma once

#include "ricsol/errors.hpp"
#include "ricsol/field.hpp"
#include "ricsol/linalg.hpp"
#include "ricsol/mat.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ricsol {

/// One summand of a bracket expansion: coeff times basis element k.
template <class K>
struct BracketTerm {
  std::size_t k;
  K coeff;
};

//------------------------------------------------------------------------------
// LieAlgebra: structure constants over a fixed basis
//------------------------------------------------------------------------------

/// Bracket table over a fixed basis. Only pairs i < j are stored;
/// [E_j, E_i] = -[E_i, E_j] and [E_i, E_i] = 0 are implied. Whether the
/// table satisfies the Jacobi identity is a property of the data checked
/// by validate(), not something the container enforces.
template <class K>
class LieAlgebra {
public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm<K>>>;

  explicit LieAlgebra(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw StructuralError("algebra dimension must be positive");
    basis_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) basis_.push_back("E" + std::to_string(i + 1));
  }

  LieAlgebra(std::size_t dim, std::vector<std::string> names) : LieAlgebra(dim) {
    if (names.size() != dim)
      throw StructuralError("expected " + std::to_string(dim) + " basis names, got " +
                            std::to_string(names.size()));
    basis_ = std::move(names);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const std::string& basis_name(std::size_t i) const { return basis_.at(i); }
  const Table& table() const { return table_; }

  /// Define [E_i, E_j] for i < j, replacing any previous entry for the pair.
  /// Terms with equal target index are summed; zero sums are dropped.
  void set_bracket(std::size_t i, std::size_t j, const std::vector<BracketTerm<K>>& terms) {
    if (i >= j)
      throw StructuralError("bracket pair (" + std::to_string(i) + "," + std::to_string(j) +
                            "): indices must satisfy i < j");
    if (j >= dim_)
      throw StructuralError("bracket pair (" + std::to_string(i) + "," + std::to_string(j) +
                            "): index out of range for dimension " + std::to_string(dim_));
    std::map<std::size_t, K> acc;
    for (const auto& t : terms) {
      if (t.k >= dim_)
        throw StructuralError("bracket pair (" + std::to_string(i) + "," + std::to_string(j) +
                              "): target index " + std::to_string(t.k) +
                              " out of range for dimension " + std::to_string(dim_));
      acc[t.k] += t.coeff;
    }
    std::vector<BracketTerm<K>> clean;
    for (const auto& [k, c] : acc)
      if (c != K(0)) clean.push_back({k, c});
    if (clean.empty())
      table_.erase({i, j});
    else
      table_[{i, j}] = std::move(clean);
  }

  /// c_{ij}^k, antisymmetry applied; zero for i == j or an absent pair.
  K structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return K(0);
    K sign(1);
    if (i > j) {
      std::swap(i, j);
      sign = K(-1);
    }
    auto it = table_.find({i, j});
    if (it == table_.end()) return K(0);
    for (const auto& t : it->second)
      if (t.k == k) return sign * t.coeff;
    return K(0);
  }

  /// [E_i, E_j] as a dense coordinate vector.
  Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
    Vec<K> out(dim_, K(0));
    if (i == j) return out;
    K sign(1);
    if (i > j) {
      std::swap(i, j);
      sign = K(-1);
    }
    auto it = table_.find({i, j});
    if (it != table_.end())
      for (const auto& t : it->second) out[t.k] += sign * t.coeff;
    return out;
  }

  /// [x, y] by bilinear expansion over the stored pairs.
  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw StructuralError("bracket: coordinate vector length mismatch");
    Vec<K> out(dim_, K(0));
    for (const auto& [pair, terms] : table_) {
      const auto [i, j] = pair;
      K w = x[i] * y[j] - x[j] * y[i];
      if (w == K(0)) continue;
      for (const auto& t : terms) out[t.k] += w * t.coeff;
    }
    return out;
  }

  /// Matrix of ad(x) = [x, .] in the stored basis; column j is [x, E_j].
  Mat<K> ad_matrix(const Vec<K>& x) const {
    Mat<K> m(dim_, dim_);
    Vec<K> e(dim_, K(0));
    for (std::size_t j = 0; j < dim_; ++j) {
      e[j] = K(1);
      Vec<K> col = bracket(x, e);
      e[j] = K(0);
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  Mat<K> ad_basis(std::size_t i) const {
    Vec<K> e(dim_, K(0));
    e[i] = K(1);
    return ad_matrix(e);
  }

private:
  std::size_t dim_ = 0;
  std::vector<std::string> basis_;
  Table table_;
};

//------------------------------------------------------------------------------
// MetricLieAlgebra: algebra plus inner product
//------------------------------------------------------------------------------

template <class K>
struct MetricLieAlgebra {
  LieAlgebra<K> algebra;
  Mat<K> gram;  // <E_i, E_j>; symmetry and definiteness checked by validate()

  explicit MetricLieAlgebra(LieAlgebra<K> alg)
      : algebra(std::move(alg)), gram(Mat<K>::identity(algebra.dim())) {}

  MetricLieAlgebra(LieAlgebra<K> alg, Mat<K> g) : algebra(std::move(alg)), gram(std::move(g)) {
    if (gram.rows() != algebra.dim() || gram.cols() != algebra.dim())
      throw StructuralError("gram matrix shape does not match algebra dimension");
  }

  std::size_t dim() const { return algebra.dim(); }

  K inner(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> gy = gram.apply(y);
    K s(0);
    for (std::size_t i = 0; i < gy.size(); ++i) s += x[i] * gy[i];
    return s;
  }
};

//------------------------------------------------------------------------------
// Validation
//------------------------------------------------------------------------------

template <class K>
struct ValidationReport {
  bool ok = false;
  bool jacobi_ok = false;
  bool gram_symmetric = false;
  bool gram_positive_definite = false;
  K max_jacobi_residual{};
  std::vector<std::string> messages;
};

/// Checks the Jacobi identity over all triples i < j < k plus symmetry and
/// positive definiteness of the gram matrix. The cyclic Jacobi sum is fully
/// alternating in its three arguments, so distinct ordered triples suffice.
template <class K>
ValidationReport<K> validate(const MetricLieAlgebra<K>& m,
                             const K& tol = FieldTraits<K>::default_tolerance()) {
  ValidationReport<K> rep;
  const LieAlgebra<K>& g = m.algebra;
  const std::size_t d = g.dim();

  rep.max_jacobi_residual = K(0);
  rep.jacobi_ok = true;
  Vec<K> e(d, K(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vec<K> sum(d, K(0));
        e[k] = K(1);
        axpy(K(1), g.bracket(g.bracket_basis(i, j), e), sum);
        e[k] = K(0);
        e[i] = K(1);
        axpy(K(1), g.bracket(g.bracket_basis(j, k), e), sum);
        e[i] = K(0);
        e[j] = K(1);
        axpy(K(1), g.bracket(g.bracket_basis(k, i), e), sum);
        e[j] = K(0);
        K res = max_abs(sum);
        if (res > rep.max_jacobi_residual) rep.max_jacobi_residual = res;
        if (res > tol && rep.jacobi_ok) {
          rep.jacobi_ok = false;
          rep.messages.push_back("Jacobi identity fails at triple (" + g.basis_name(i) + ", " +
                                 g.basis_name(j) + ", " + g.basis_name(k) + ")");
        }
      }

  if constexpr (FieldTraits<K>::exact) {
    rep.gram_symmetric = m.gram.is_symmetric();
  } else {
    rep.gram_symmetric = (m.gram - m.gram.transpose()).max_abs() <= tol;
  }
  if (!rep.gram_symmetric) rep.messages.push_back("gram matrix is not symmetric");

  rep.gram_positive_definite = rep.gram_symmetric && gram_positive_definite(m.gram);
  if (rep.gram_symmetric && !rep.gram_positive_definite)
    rep.messages.push_back("gram matrix is not positive definite");

  rep.ok = rep.jacobi_ok && rep.gram_symmetric && rep.gram_positive_definite;
  return rep;
}

//------------------------------------------------------------------------------
// Orthogonal frames
//------------------------------------------------------------------------------

/// A gram-orthogonal frame F_j = sum_i to_frame(i, j) E_i for a metric
/// algebra, with the bracket table rewritten in frame coordinates. The frame
/// gram is diagonal; over double it is the identity, over Rational each
/// diagonal entry is 1 exactly when the squared norm had a rational square
/// root (square roots are never introduced).
template <class K>
struct OrthonormalFrame {
  MetricLieAlgebra<K> algebra;  // gram diagonal
  Mat<K> to_frame;              // columns are frame vectors in original coordinates
  Mat<K> from_frame;            // inverse of to_frame
};

namespace detail {

/// Over double: gram = L L^T, frame columns B = L^{-T}, so B^T gram B = I.
inline std::pair<Mat<double>, Mat<double>> orthogonal_basis(const Mat<double>& gram) {
  auto chol = float_cholesky(gram);
  if (!chol) throw MetricError("gram matrix is not positive definite");
  Mat<double> from = chol->transpose();  // L^T, upper triangular
  auto to = float_invert(from);
  if (!to) throw MetricError("gram matrix is numerically singular");
  return {*to, from};
}

/// Over Rational: Gram-Schmidt without normalization, then rescale any
/// column whose squared norm is a perfect rational square.
inline std::pair<Mat<Rational>, Mat<Rational>> orthogonal_basis(const Mat<Rational>& gram) {
  const std::size_t d = gram.rows();
  Mat<Rational> b = Mat<Rational>::identity(d);
  Vec<Rational> norm_sq(d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    Vec<Rational> v = b.col(j);
    for (std::size_t a = 0; a < j; ++a) {
      Vec<Rational> u = b.col(a);
      Vec<Rational> gu = gram.apply(u);
      Rational proj(0);
      for (std::size_t i = 0; i < d; ++i) proj += v[i] * gu[i];
      if (proj != 0) axpy(Rational(-proj / norm_sq[a]), u, v);
    }
    Vec<Rational> gv = gram.apply(v);
    Rational nsq(0);
    for (std::size_t i = 0; i < d; ++i) nsq += v[i] * gv[i];
    if (nsq <= 0) throw MetricError("gram matrix is not positive definite");
    if (auto root = exact_sqrt(nsq)) {
      for (auto& x : v) x /= *root;
      nsq = 1;
    }
    norm_sq[j] = nsq;
    for (std::size_t i = 0; i < d; ++i) b(i, j) = v[i];
  }
  auto inv = exact_invert(b);
  return {b, *inv};  // b is triangular with nonzero diagonal, always invertible
}

} // namespace detail

template <class K>
OrthonormalFrame<K> orthonormalize(const MetricLieAlgebra<K>& m) {
  if (!m.gram.is_symmetric() && FieldTraits<K>::exact)
    throw MetricError("gram matrix is not symmetric");
  auto [to_frame, from_frame] = detail::orthogonal_basis(m.gram);
  const std::size_t d = m.dim();

  // Frame gram: diagonal by construction; recompute it rather than assume I.
  Mat<K> frame_gram = to_frame.transpose() * m.gram * to_frame;
  Mat<K> diag(d, d);
  for (std::size_t i = 0; i < d; ++i) diag(i, i) = frame_gram(i, i);

  LieAlgebra<K> frame_alg(d, m.algebra.basis_names());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vec<K> w = from_frame.apply(m.algebra.bracket(to_frame.col(a), to_frame.col(b)));
      std::vector<BracketTerm<K>> terms;
      for (std::size_t k = 0; k < d; ++k)
        if (w[k] != K(0)) terms.push_back({k, w[k]});
      frame_alg.set_bracket(a, b, terms);
    }

  return {MetricLieAlgebra<K>(std::move(frame_alg), std::move(diag)), std::move(to_frame),
          std::move(from_frame)};
}

} // namespace ricsol
