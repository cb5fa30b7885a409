#pragma once

#include "ricsol/algebra.hpp"

#include <cstddef>
#include <vector>

namespace ricsol {

//------------------------------------------------------------------------------
// Derivation algebra Der(g)
//------------------------------------------------------------------------------

template <class K>
struct DerivationSpace {
  std::vector<Mat<K>> basis;  // operator matrices, entry (i, j) = coefficient of E_i in D(E_j)
  std::size_t dimension = 0;
  K max_leibniz_residual{};   // max defect of the returned basis, 0 in exact mode
};

/// Max-norm defect of D[E_i,E_j] - [D E_i, E_j] - [E_i, D E_j] over all
/// basis pairs i < j. Zero exactly when D is a derivation (exact mode).
template <class K>
K leibniz_residual(const MetricLieAlgebra<K>& m, const Mat<K>& dmat) {
  const LieAlgebra<K>& g = m.algebra;
  const std::size_t dim = g.dim();
  if (dmat.rows() != dim || dmat.cols() != dim)
    throw StructuralError("derivation candidate has wrong shape for dimension " +
                          std::to_string(dim));

  K worst(0);
  Vec<K> ei(dim, K(0)), ej(dim, K(0));
  for (std::size_t i = 0; i < dim; ++i) {
    ei[i] = K(1);
    Vec<K> di = dmat.col(i);
    for (std::size_t j = i + 1; j < dim; ++j) {
      ej[j] = K(1);
      Vec<K> defect = dmat.apply(g.bracket_basis(i, j));
      axpy(K(-1), g.bracket(di, ej), defect);
      axpy(K(-1), g.bracket(ei, dmat.col(j)), defect);
      ej[j] = K(0);
      K r = max_abs(defect);
      if (r > worst) worst = r;
    }
    ei[i] = K(0);
  }
  return worst;
}

/// The Leibniz condition on an unknown matrix D, flattened row-major into
/// dim^2 coordinates: for each pair i < j and each output coordinate l,
///   sum_k c_ij^k D_lk - sum_a c_aj^l D_ai - sum_b c_ib^l D_bj = 0.
template <class K>
Mat<K> leibniz_system(const LieAlgebra<K>& g) {
  const std::size_t dim = g.dim();

  // dense bracket coordinates, antisymmetry handled by bracket_basis
  std::vector<Vec<K>> bk(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) bk[a * dim + b] = g.bracket_basis(a, b);

  Mat<K> sys(dim * dim * (dim - 1) / 2, dim * dim);
  std::size_t row = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Vec<K>& cij = bk[i * dim + j];
      for (std::size_t l = 0; l < dim; ++l, ++row) {
        for (std::size_t k = 0; k < dim; ++k)
          if (cij[k] != K(0)) sys(row, l * dim + k) += cij[k];
        for (std::size_t a = 0; a < dim; ++a) {
          const K& c_ajl = bk[a * dim + j][l];
          if (c_ajl != K(0)) sys(row, a * dim + i) -= c_ajl;
        }
        for (std::size_t b = 0; b < dim; ++b) {
          const K& c_ibl = bk[i * dim + b][l];
          if (c_ibl != K(0)) sys(row, b * dim + j) -= c_ibl;
        }
      }
    }
  return sys;
}

/// Nullspace of the Leibniz system, unflattened back to operator matrices.
/// Exact mode returns the reduced-echelon basis; float mode an orthonormal
/// one with singular values below max(tol, 1e-10) * sigma_max treated as 0.
template <class K>
DerivationSpace<K> derivation_basis(const MetricLieAlgebra<K>& m,
                                    const K& tol = FieldTraits<K>::default_tolerance()) {
  const std::size_t dim = m.dim();
  std::vector<Vec<K>> null = nullspace(leibniz_system(m.algebra), tol);

  DerivationSpace<K> space;
  space.dimension = null.size();
  space.max_leibniz_residual = K(0);
  for (const Vec<K>& flat : null) {
    Mat<K> d(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) d(r, c) = flat[r * dim + c];
    K res = leibniz_residual(m, d);
    if (res > space.max_leibniz_residual) space.max_leibniz_residual = res;
    space.basis.push_back(std::move(d));
  }
  return space;
}

} // namespace ricsol
