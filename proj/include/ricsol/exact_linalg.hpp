#pragma once

#include "ricsol/mat.hpp"
#include "ricsol/rational.hpp"

#include <optional>
#include <vector>

namespace ricsol {

struct ExactRref {
  Mat<Rational> rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form via fraction-free (Bareiss) forward elimination
/// on the denominator-cleared integer matrix, then rational normalization.
ExactRref exact_rref(const Mat<Rational>& a);

std::size_t exact_rank(const Mat<Rational>& a);

/// Nullspace basis in the canonical free-column form: one vector per free
/// column, unit entry in the free slot.
std::vector<Vec<Rational>> exact_nullspace(const Mat<Rational>& a);

/// A solution of A x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<Vec<Rational>> exact_solve(const Mat<Rational>& a, const Vec<Rational>& b);

std::optional<Mat<Rational>> exact_invert(const Mat<Rational>& a);

/// det of each leading principal k x k block, k = 1..n.
std::vector<Rational> leading_principal_minors(const Mat<Rational>& a);

} // namespace ricsol
