#pragma once

#include "ricsol/algebra.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace ricsol {

//------------------------------------------------------------------------------
// Solvability and complete-solvability witnesses
//------------------------------------------------------------------------------

struct StructureReport {
  std::vector<std::size_t> derived_series_dims;
  bool solvable = false;
  bool triangular_basis_found = false;
  std::optional<std::vector<std::size_t>> triangular_order;
  bool eigen_sample_real = false;
  std::size_t samples_used = 0;

  /// Positive certificate that every ad X has real spectrum: solvable with
  /// an explicit triangularizing flag. eigen_sample_real is only evidence.
  bool completely_solvable_certified() const { return solvable && triangular_basis_found; }
};

/// Dimensions of g, [g, g], [[g,g],[g,g]], ... until the chain stabilizes or
/// reaches zero. Brackets only; the metric plays no role.
template <class K>
std::vector<std::size_t> derived_series(const MetricLieAlgebra<K>& m,
                                        const K& tol = FieldTraits<K>::default_tolerance()) {
  const LieAlgebra<K>& g = m.algebra;
  const std::size_t dim = g.dim();

  std::vector<std::size_t> dims{dim};
  std::vector<Vec<K>> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec<K> e(dim, K(0));
    e[i] = K(1);
    basis.push_back(std::move(e));
  }

  while (true) {
    const std::size_t r = basis.size();
    if (r <= 1) {  // a line brackets to zero with itself
      dims.push_back(0);
      break;
    }
    Mat<K> stacked(r * (r - 1) / 2, dim);
    std::size_t row = 0;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b, ++row) {
        Vec<K> w = g.bracket(basis[a], basis[b]);
        for (std::size_t c = 0; c < dim; ++c) stacked(row, c) = w[c];
      }
    std::vector<Vec<K>> next = row_space_basis(stacked, tol);
    dims.push_back(next.size());
    if (next.empty() || next.size() >= r) break;
    basis = std::move(next);
  }
  return dims;
}

//------------------------------------------------------------------------------
// Triangularity
//------------------------------------------------------------------------------

struct TriangularityWitness {
  bool found = false;
  std::optional<std::vector<std::size_t>> order;  // position t holds an original basis index
};

namespace detail {

/// ad E_i maps each reordered vector into the span of itself and the later
/// ones, for every i; by linearity in X this makes every ad X triangular.
template <class K>
bool order_is_triangular(const LieAlgebra<K>& g, const std::vector<std::size_t>& order,
                         const K& tol) {
  const std::size_t dim = g.dim();
  std::vector<std::size_t> pos(dim);
  for (std::size_t t = 0; t < dim; ++t) pos[order[t]] = t;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t t = 0; t < dim; ++t) {
      Vec<K> w = g.bracket_basis(i, order[t]);
      for (std::size_t s = 0; s < dim; ++s)
        if (pos[s] < t && field_abs(w[s]) > tol) return false;
    }
  return true;
}

} // namespace detail

/// With an explicit order: verifies it. Without one: greedily builds a flag
/// from the end, picking any unused basis vector whose ad-images stay in the
/// span of itself and the already-picked set. Failure of the search is not a
/// proof that no flag exists (only basis-aligned flags are tried).
template <class K>
TriangularityWitness triangularity_witness(
    const MetricLieAlgebra<K>& m,
    const std::optional<std::vector<std::size_t>>& order = std::nullopt,
    const K& tol = FieldTraits<K>::default_tolerance()) {
  const LieAlgebra<K>& g = m.algebra;
  const std::size_t dim = g.dim();

  if (order) {
    if (order->size() != dim) throw ParameterError("basis order has wrong length");
    std::vector<bool> seen(dim, false);
    for (std::size_t v : *order) {
      if (v >= dim || seen[v]) throw ParameterError("basis order is not a permutation");
      seen[v] = true;
    }
    if (detail::order_is_triangular(g, *order, tol)) return {true, *order};
    return {false, std::nullopt};
  }

  std::vector<std::size_t> picks;
  std::vector<bool> used(dim, false);
  for (std::size_t step = 0; step < dim; ++step) {
    bool advanced = false;
    for (std::size_t v = 0; v < dim && !advanced; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < dim && ok; ++i) {
        Vec<K> w = g.bracket_basis(i, v);
        for (std::size_t s = 0; s < dim; ++s)
          if (s != v && !used[s] && field_abs(w[s]) > tol) {
            ok = false;
            break;
          }
      }
      if (ok) {
        picks.push_back(v);
        used[v] = true;
        advanced = true;
      }
    }
    if (!advanced) return {false, std::nullopt};
  }
  std::vector<std::size_t> order_out(picks.rbegin(), picks.rend());
  return {true, std::move(order_out)};
}

//------------------------------------------------------------------------------
// Randomized real-spectrum evidence
//------------------------------------------------------------------------------

/// Deterministic sampling of ad X spectra: coefficients are drawn uniformly
/// from [-1, 1] with a fixed generator (not the library distribution, whose
/// output is implementation-defined). An ad X whose spectral radius is below
/// 1e-7 of its Frobenius scale counts as real: eigensolvers report defective
/// zero eigenvalues of nilpotent matrices with noise up to about eps^(1/k).
template <class K>
bool eigen_sample_check(const MetricLieAlgebra<K>& m, std::size_t samples = 64,
                        std::uint64_t seed = 1729) {
  if (samples == 0) throw ParameterError("eigen sampling needs at least one sample");
  const LieAlgebra<K>& g = m.algebra;
  const std::size_t dim = g.dim();

  std::vector<Mat<double>> adb;
  for (std::size_t i = 0; i < dim; ++i) {
    Mat<K> a = g.ad_basis(i);
    Mat<double> ad(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) ad(r, c) = FieldTraits<K>::to_double(a(r, c));
    adb.push_back(std::move(ad));
  }

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };

  for (std::size_t s = 0; s < samples; ++s) {
    Mat<double> a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      double xi = uniform();
      a += xi * adb[i];
    }
    double scale = std::sqrt(a.frobenius_sq());
    auto eig = float_eigenvalues(a);
    double rho = 0.0;
    for (const auto& l : eig) rho = std::max(rho, std::abs(l));
    if (rho <= 1e-7 * std::max(1.0, scale)) continue;  // nilpotent up to noise
    for (const auto& l : eig)
      if (std::fabs(l.imag()) > 1e-9 * rho) return false;
  }
  return true;
}

//------------------------------------------------------------------------------
// Combined report
//------------------------------------------------------------------------------

template <class K>
StructureReport structure_report(const MetricLieAlgebra<K>& m,
                                 const std::optional<std::vector<std::size_t>>& order = std::nullopt,
                                 std::size_t samples = 64, std::uint64_t seed = 1729,
                                 const K& tol = FieldTraits<K>::default_tolerance()) {
  StructureReport rep;
  rep.derived_series_dims = derived_series(m, tol);
  rep.solvable = rep.derived_series_dims.back() == 0;
  TriangularityWitness tri = triangularity_witness(m, order, tol);
  rep.triangular_basis_found = tri.found;
  rep.triangular_order = std::move(tri.order);
  rep.eigen_sample_real = eigen_sample_check(m, samples, seed);
  rep.samples_used = samples;
  return rep;
}

} // namespace ricsol
