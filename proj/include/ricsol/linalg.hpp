#pragma once

#include "ricsol/exact_linalg.hpp"
#include "ricsol/float_linalg.hpp"

namespace ricsol {

/// Mode-dispatched entry points shared by the engines. Exact mode ignores
/// the tolerance argument; rank decisions there are literal.

template <class K>
std::vector<Vec<K>> nullspace(const Mat<K>& a, const K& tol) {
  if constexpr (FieldTraits<K>::exact) {
    (void)tol;
    return exact_nullspace(a);
  } else {
    return float_nullspace(a, tol);
  }
}

template <class K>
std::vector<Vec<K>> row_space_basis(const Mat<K>& a, const K& tol) {
  if constexpr (FieldTraits<K>::exact) {
    (void)tol;
    ExactRref r = exact_rref(a);
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < r.rank; ++i) rows.push_back(r.rref.row(i));
    return rows;
  } else {
    return float_row_space(a, tol);
  }
}

template <class K>
std::size_t matrix_rank(const Mat<K>& a, const K& tol) {
  if constexpr (FieldTraits<K>::exact) {
    (void)tol;
    return exact_rank(a);
  } else {
    return float_rank(a, tol);
  }
}

template <class K>
std::optional<Mat<K>> invert(const Mat<K>& a) {
  if constexpr (FieldTraits<K>::exact) {
    return exact_invert(a);
  } else {
    return float_invert(a);
  }
}

template <class K>
bool gram_positive_definite(const Mat<K>& g) {
  if constexpr (FieldTraits<K>::exact) {
    if (g.rows() != g.cols() || g.rows() == 0) return false;
    for (const Rational& minor : leading_principal_minors(g))
      if (minor <= 0) return false;
    return true;
  } else {
    return float_is_spd(g);
  }
}

} // namespace ricsol
