#pragma once

#include "ricsol/mat.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace ricsol {

/// Double-precision dense backends. Rank decisions use the relative cutoff
/// max(rel_tol, 1e-10) * sigma_max on singular values.

std::vector<Vec<double>> float_nullspace(const Mat<double>& a, double rel_tol);

std::size_t float_rank(const Mat<double>& a, double rel_tol);

/// Orthonormal basis of the row space (right singular vectors up to rank).
std::vector<Vec<double>> float_row_space(const Mat<double>& a, double rel_tol);

struct LstsqResult {
  Vec<double> x;       // minimum-norm least-squares solution
  double residual_sq;  // squared 2-norm of b - A x
};
LstsqResult float_lstsq_minnorm(const Mat<double>& a, const Vec<double>& b, double rel_tol);

std::vector<std::complex<double>> float_eigenvalues(const Mat<double>& a);

bool float_is_spd(const Mat<double>& a);

/// Lower Cholesky factor of an SPD matrix, or nullopt.
std::optional<Mat<double>> float_cholesky(const Mat<double>& a);

std::optional<Mat<double>> float_invert(const Mat<double>& a);

} // namespace ricsol
