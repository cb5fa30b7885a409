#pragma once

#include "ricsol/algebra.hpp"
#include "ricsol/curvature.hpp"
#include "ricsol/derivations.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ricsol {

//------------------------------------------------------------------------------
// Algebraic Ricci soliton feasibility: Ric = c id + D, D a derivation
//------------------------------------------------------------------------------

enum class SolitonStatus { Feasible, Infeasible };

/// Largest-magnitude entry of the residual matrix Ric - c id - D at the
/// best fit; indices refer to the stored basis.
template <class K>
struct ObstructionWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  K value{};
};

/// residual_sq is the squared Frobenius distance from Ric to the affine
/// span of the identity and Der(g); kept squared so the exact mode stays
/// rational. Feasible means residual_sq = 0 (exact) or its square root is
/// within tolerance (float). c and the derivation data are only present
/// when feasible; the obstruction only when infeasible.
template <class K>
struct SolitonResult {
  SolitonStatus status = SolitonStatus::Infeasible;
  std::optional<K> c;
  std::optional<Vec<K>> derivation_coords;  // in derivation_basis(m) order
  std::optional<Mat<K>> D_matrix;
  K residual_sq{};
  std::optional<ObstructionWitness<K>> obstruction;

  double residual_norm() const {
    return std::sqrt(FieldTraits<K>::to_double(residual_sq));
  }
};

namespace detail {

/// Frobenius inner-product weight of flat entry (r, c) when the frame has
/// squared norms d: normalizing the frame rescales entry (r, c) of an
/// operator matrix by sqrt(d_r/d_c), so the squared weight is d_r/d_c.
template <class K>
Vec<K> operator_entry_weights(const Vec<K>& d) {
  const std::size_t dim = d.size();
  Vec<K> w(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) w[r * dim + c] = d[r] / d[c];
  return w;
}

template <class K>
Vec<K> flatten(const Mat<K>& m) {
  Vec<K> v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

/// Weighted least squares over the column span of a, by normal equations
/// over an independent subset of columns (preferring earlier ones). Returns
/// full-length coordinates with dropped columns at zero, plus the exact
/// squared residual. Exact mode only; the float path uses SVD instead.
inline std::pair<Vec<Rational>, Rational> exact_weighted_lstsq(const Mat<Rational>& a,
                                                               const Vec<Rational>& b,
                                                               const Vec<Rational>& w) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> keep = exact_rref(a).pivot_cols;

  const std::size_t p = keep.size();
  Mat<Rational> normal(p, p);
  Vec<Rational> rhs(p, Rational(0));
  for (std::size_t s = 0; s < p; ++s) {
    for (std::size_t t = s; t < p; ++t) {
      Rational acc(0);
      for (std::size_t r = 0; r < rows; ++r) acc += w[r] * a(r, keep[s]) * a(r, keep[t]);
      normal(s, t) = acc;
      normal(t, s) = acc;
    }
    Rational acc(0);
    for (std::size_t r = 0; r < rows; ++r) acc += w[r] * a(r, keep[s]) * b[r];
    rhs[s] = acc;
  }

  auto sol = exact_solve(normal, rhs);
  if (!sol)  // cannot happen: normal matrix is PD on independent columns
    throw StructuralError("normal equations unexpectedly singular");
  Vec<Rational> x(cols, Rational(0));
  for (std::size_t s = 0; s < p; ++s) x[keep[s]] = (*sol)[s];

  Rational res_sq(0);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational v = b[r];
    for (std::size_t s = 0; s < p; ++s) v -= a(r, keep[s]) * x[keep[s]];
    if (v != 0) res_sq += w[r] * v * v;
  }
  return {std::move(x), std::move(res_sq)};
}

} // namespace detail

/// Minimizes ||Ric - c id - sum_k a_k D_k||_F over (c, a). The identity is
/// the first column; if it is itself a derivation (abelian case) the fit is
/// still well-posed: float uses the minimum-norm solution, exact drops
/// dependent columns (so c keeps the minimum-norm representative role).
/// With a non-identity gram the fit runs in the orthogonalized frame under
/// the induced weighted Frobenius norm, and results map back.
template <class K>
SolitonResult<K> soliton_solve(const MetricLieAlgebra<K>& m,
                               const K& tol = FieldTraits<K>::default_tolerance()) {
  const std::size_t dim = m.dim();
  const bool orthonormal = m.gram == Mat<K>::identity(dim);

  Mat<K> ric = ricci_operator(m);
  DerivationSpace<K> der = derivation_basis(m, tol);

  // frame versions of Ric and the derivation basis
  Mat<K> ric_f = ric;
  std::vector<Mat<K>> der_f;
  Vec<K> d(dim, K(1));
  std::optional<OrthonormalFrame<K>> frame;
  if (!orthonormal) {
    frame = orthonormalize(m);
    for (std::size_t i = 0; i < dim; ++i) d[i] = frame->algebra.gram(i, i);
    ric_f = frame->from_frame * ric * frame->to_frame;
    for (const Mat<K>& dk : der.basis)
      der_f.push_back(frame->from_frame * dk * frame->to_frame);
  }
  const std::vector<Mat<K>>& basis_f = orthonormal ? der.basis : der_f;

  const std::size_t ncols = 1 + der.dimension;
  Mat<K> a(dim * dim, ncols);
  {
    Vec<K> id_flat = detail::flatten(Mat<K>::identity(dim));
    for (std::size_t r = 0; r < id_flat.size(); ++r) a(r, 0) = id_flat[r];
    for (std::size_t k = 0; k < der.dimension; ++k) {
      Vec<K> flat = detail::flatten(basis_f[k]);
      for (std::size_t r = 0; r < flat.size(); ++r) a(r, k + 1) = flat[r];
    }
  }
  Vec<K> b = detail::flatten(ric_f);

  Vec<K> x;
  K residual_sq{};
  if constexpr (FieldTraits<K>::exact) {
    auto [xe, rs] = detail::exact_weighted_lstsq(a, b, detail::operator_entry_weights(d));
    x = std::move(xe);
    residual_sq = std::move(rs);
  } else {
    LstsqResult ls = float_lstsq_minnorm(a, b, tol);
    x = std::move(ls.x);
    residual_sq = ls.residual_sq;
  }

  SolitonResult<K> out;
  out.residual_sq = residual_sq;
  bool feasible;
  if constexpr (FieldTraits<K>::exact) {
    feasible = residual_sq == 0;
  } else {
    feasible = residual_sq <= tol * tol;
  }

  if (feasible) {
    out.status = SolitonStatus::Feasible;
    out.c = x[0];
    Vec<K> coords(x.begin() + 1, x.end());
    Mat<K> dmat(dim, dim);
    for (std::size_t k = 0; k < der.dimension; ++k)
      if (coords[k] != K(0)) dmat += coords[k] * der.basis[k];
    out.derivation_coords = std::move(coords);
    out.D_matrix = std::move(dmat);
  } else {
    out.status = SolitonStatus::Infeasible;
    // witness: largest-magnitude entry of the stored-basis residual at the
    // best fit; row-major scan, strictly-greater comparison
    Mat<K> best(dim, dim);
    for (std::size_t k = 0; k < der.dimension; ++k)
      if (x[k + 1] != K(0)) best += x[k + 1] * der.basis[k];
    for (std::size_t i = 0; i < dim; ++i) best(i, i) += x[0];
    Mat<K> res = ric - best;
    ObstructionWitness<K> wit;
    K top(-1);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        K mag = field_abs(res(r, c));
        if (mag > top) {
          top = mag;
          wit = {r, c, res(r, c)};
        }
      }
    out.obstruction = wit;
  }
  return out;
}

//------------------------------------------------------------------------------
// Independent certificate check
//------------------------------------------------------------------------------

/// Direct evaluation of both defects of a claimed certificate (c, D):
/// the squared Frobenius norm of Ric - c id - D and the Leibniz max-norm
/// defect of D. Shares no machinery with soliton_solve beyond the Ricci
/// computation itself.
template <class K>
struct CertificateCheck {
  bool ok = false;
  K equation_residual_sq{};
  K leibniz_defect{};
};

template <class K>
CertificateCheck<K> verify_certificate(const MetricLieAlgebra<K>& m, const K& c,
                                       const Mat<K>& dmat,
                                       const K& tol = FieldTraits<K>::default_tolerance()) {
  const std::size_t dim = m.dim();
  if (dmat.rows() != dim || dmat.cols() != dim)
    throw StructuralError("certificate matrix has wrong shape for dimension " +
                          std::to_string(dim));
  const bool orthonormal = m.gram == Mat<K>::identity(dim);

  Mat<K> res = ricci_operator(m) - dmat;
  for (std::size_t i = 0; i < dim; ++i) res(i, i) -= c;

  CertificateCheck<K> check;
  if (orthonormal) {
    check.equation_residual_sq = res.frobenius_sq();
  } else {
    auto frame = orthonormalize(m);
    Mat<K> res_f = frame.from_frame * res * frame.to_frame;
    Vec<K> d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = frame.algebra.gram(i, i);
    Vec<K> w = detail::operator_entry_weights(d);
    K acc(0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t cc = 0; cc < dim; ++cc)
        acc += w[r * dim + cc] * res_f(r, cc) * res_f(r, cc);
    check.equation_residual_sq = acc;
  }
  check.leibniz_defect = leibniz_residual(m, dmat);
  check.ok = check.equation_residual_sq <= tol * tol && check.leibniz_defect <= tol;
  return check;
}

} // namespace ricsol
