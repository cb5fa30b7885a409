#pragma once

#include "ricsol/catalog.hpp"
#include "ricsol/soliton.hpp"
#include "ricsol/structure.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ricsol {

//------------------------------------------------------------------------------
// One-shot classification of a hypersurface algebra
//------------------------------------------------------------------------------

/// Everything the classification of s(theta) needs in one record. The
/// verdict_scope is "ricci-soliton" only when complete solvability is
/// certified; otherwise the feasibility verdict speaks about the algebraic
/// condition alone.
template <class K>
struct ClassificationRecord {
  std::size_t n = 0;
  AnglePair<K> theta{};
  std::vector<std::string> basis;
  Mat<K> ricci;
  SolitonResult<K> soliton;
  StructureReport structure;
  std::string verdict_scope;
};

template <class K>
ClassificationRecord<K> classify_hypersurface(std::size_t n, const AnglePair<K>& theta,
                                              const K& tol = FieldTraits<K>::default_tolerance(),
                                              std::size_t samples = 64,
                                              std::uint64_t seed = 1729) {
  HypersurfaceAlgebra<K> h = build_lie_hypersurface(n, theta);
  ClassificationRecord<K> rec;
  rec.n = n;
  rec.theta = theta;
  rec.basis = h.metric_algebra.algebra.basis_names();
  rec.ricci = ricci_operator(h.metric_algebra);
  rec.soliton = soliton_solve(h.metric_algebra, tol);
  rec.structure = structure_report(h.metric_algebra, std::nullopt, samples, seed, tol);
  rec.verdict_scope =
      rec.structure.completely_solvable_certified() ? "ricci-soliton" : "algebraic-only";
  return rec;
}

//------------------------------------------------------------------------------
// Theta grids and sweeps
//------------------------------------------------------------------------------

template <class K>
struct ThetaGrid {
  std::string type;  // "uniform-radians" or "tan-half-angle"
  std::vector<AnglePair<K>> points;
};

/// Float mode: uniform radians over [0, pi/2]. Exact mode: the rational
/// parametrization cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2) with t uniform
/// on [0, 1], which hits both endpoints exactly and stays on the unit
/// circle without square roots.
template <class K>
ThetaGrid<K> make_theta_grid(std::size_t steps) {
  if (steps < 2) throw ParameterError("theta grid needs at least 2 steps");
  ThetaGrid<K> grid;
  if constexpr (FieldTraits<K>::exact) {
    grid.type = "tan-half-angle";
    for (std::size_t k = 0; k < steps; ++k) {
      Rational t(k, steps - 1);
      Rational t2 = t * t;
      grid.points.push_back(
          angle_from_pair<K>((1 - t2) / (1 + t2), 2 * t / (1 + t2)));
    }
  } else {
    grid.type = "uniform-radians";
    constexpr double half_pi = 1.5707963267948966;
    for (std::size_t k = 0; k < steps; ++k)
      grid.points.push_back(angle_from_radians<K>(
          half_pi * static_cast<double>(k) / static_cast<double>(steps - 1)));
  }
  return grid;
}

template <class K>
struct SweepManifest {
  std::size_t n_min = 0, n_max = 0;
  ThetaGrid<K> grid;
  K tolerance{};
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<ClassificationRecord<K>> records;  // ordered by (n, grid index)
};

template <class K>
SweepManifest<K> run_sweep(std::size_t n_min, std::size_t n_max, std::size_t theta_steps,
                           const K& tol = FieldTraits<K>::default_tolerance(),
                           std::size_t samples = 64, std::uint64_t seed = 1729) {
  if (n_min < 2) throw ParameterError("sweep requires n-min >= 2");
  if (n_max < n_min) throw ParameterError("sweep requires n-max >= n-min");
  SweepManifest<K> sweep;
  sweep.n_min = n_min;
  sweep.n_max = n_max;
  sweep.grid = make_theta_grid<K>(theta_steps);
  sweep.tolerance = tol;
  sweep.seed = seed;
  sweep.samples = samples;
  for (std::size_t n = n_min; n <= n_max; ++n)
    for (const AnglePair<K>& theta : sweep.grid.points)
      sweep.records.push_back(classify_hypersurface(n, theta, tol, samples, seed));
  return sweep;
}

} // namespace ricsol
