#pragma once

#include "ricsol/algebra.hpp"
#include "ricsol/errors.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace ricsol {

//------------------------------------------------------------------------------
// Angles
//------------------------------------------------------------------------------

/// An angle in [0, pi/2] stored as the pair (cos, sin). The pair form is the
/// authoritative one: exact mode never touches transcendental functions.
template <class K>
struct AnglePair {
  K cos_t;
  K sin_t;

  double radians() const {
    return std::atan2(FieldTraits<K>::to_double(sin_t), FieldTraits<K>::to_double(cos_t));
  }
};

/// Validates cos^2 + sin^2 = 1 (exactly over Rational, to 1e-15 over double)
/// and both components nonnegative, which pins the angle to [0, pi/2].
template <class K>
AnglePair<K> angle_from_pair(const K& c, const K& s) {
  if constexpr (FieldTraits<K>::exact) {
    if (c < 0 || s < 0) throw ParameterError("angle pair must have cos >= 0 and sin >= 0");
    if (c * c + s * s != 1)
      throw ParameterError("angle pair violates cos^2 + sin^2 = 1: (" +
                           FieldTraits<K>::to_string(c) + ", " + FieldTraits<K>::to_string(s) +
                           ")");
  } else {
    if (c < -1e-15 || s < -1e-15)
      throw ParameterError("angle pair must have cos >= 0 and sin >= 0");
    if (std::fabs(c * c + s * s - 1.0) > 1e-15)
      throw ParameterError("angle pair violates cos^2 + sin^2 = 1 beyond 1e-15: (" +
                           FieldTraits<K>::to_string(c) + ", " + FieldTraits<K>::to_string(s) +
                           ")");
  }
  return {c, s};
}

/// Float-mode convenience: cos/sin computed in double precision.
template <class K>
AnglePair<K> angle_from_radians(double theta) {
  if constexpr (FieldTraits<K>::exact) {
    (void)theta;
    throw ParameterError("exact mode requires the angle as a rational (cos, sin) pair");
  } else {
    constexpr double half_pi = 1.5707963267948966;
    if (theta < -1e-12 || theta > half_pi + 1e-12)
      throw ParameterError("theta must lie in [0, pi/2], got " +
                           FieldTraits<double>::to_string(theta));
    return angle_from_pair<K>(std::cos(theta), std::sin(theta));
  }
}

//------------------------------------------------------------------------------
// Solvable model of complex hyperbolic space
//------------------------------------------------------------------------------

template <class K>
struct SolvableModel {
  MetricLieAlgebra<K> metric_algebra;  // dim 2n, orthonormal basis
  Mat<K> complex_structure;            // J, satisfies J^2 = -id
  std::size_t n;
};

/// Basis {A_0, X_1, Y_1, ..., X_{n-1}, Y_{n-1}, Z_0} with nonzero brackets
/// [A_0, X_i] = (1/2)X_i, [A_0, Y_i] = (1/2)Y_i, [A_0, Z_0] = Z_0,
/// [X_i, Y_i] = Z_0, and J(A_0) = Z_0, J(X_i) = Y_i.
template <class K>
SolvableModel<K> build_solvable_model(std::size_t n) {
  if (n < 2) throw ParameterError("solvable model requires n >= 2");
  const std::size_t dim = 2 * n;
  const std::size_t z = dim - 1;

  std::vector<std::string> names;
  names.push_back("A0");
  for (std::size_t i = 1; i <= n - 1; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  names.push_back("Z0");

  LieAlgebra<K> g(dim, names);
  const K half = frac<K>(1, 2);
  for (std::size_t i = 1; i <= n - 1; ++i) {
    const std::size_t xi = 2 * i - 1, yi = 2 * i;
    g.set_bracket(0, xi, {{xi, half}});
    g.set_bracket(0, yi, {{yi, half}});
    g.set_bracket(xi, yi, {{z, K(1)}});
  }
  g.set_bracket(0, z, {{z, K(1)}});

  Mat<K> j(dim, dim);
  j(z, 0) = K(1);   // J(A_0) = Z_0
  j(0, z) = K(-1);  // J(Z_0) = -A_0
  for (std::size_t i = 1; i <= n - 1; ++i) {
    j(2 * i, 2 * i - 1) = K(1);   // J(X_i) = Y_i
    j(2 * i - 1, 2 * i) = K(-1);  // J(Y_i) = -X_i
  }

  return {MetricLieAlgebra<K>(std::move(g)), std::move(j), n};
}

//------------------------------------------------------------------------------
// The hypersurface family s(theta)
//------------------------------------------------------------------------------

template <class K>
struct HypersurfaceAlgebra {
  MetricLieAlgebra<K> metric_algebra;  // dim 2n-1, orthonormal basis
  std::size_t n;
  AnglePair<K> theta;

  /// Ordered basis {T, Y_1, X_2, Y_2, ..., X_{n-1}, Y_{n-1}, Z_0}.
  std::size_t t_index() const { return 0; }
  std::size_t y_index(std::size_t k) const { return k == 1 ? 1 : 2 * k - 1; }
  std::size_t x_index(std::size_t k) const { return 2 * k - 2; }  // k >= 2
  std::size_t z_index() const { return 2 * n - 2; }
};

/// Nonzero brackets: [T, Y_1] = (1/2)cos Y_1 - sin Z_0, [T, V] = (1/2)cos V
/// for V among X_2..Y_{n-1}, [T, Z_0] = cos Z_0, [X_k, Y_k] = Z_0. For n = 2
/// the X_2..Y_{n-1} block is empty. At cos = 0 the T-brackets degenerate to
/// [T, Y_1] = -Z_0 and the rest of the table is Heisenberg.
template <class K>
HypersurfaceAlgebra<K> build_lie_hypersurface(std::size_t n, const AnglePair<K>& theta) {
  if (n < 2) throw ParameterError("hypersurface family requires n >= 2");
  const std::size_t dim = 2 * n - 1;
  const std::size_t z = dim - 1;
  const K c = theta.cos_t, s = theta.sin_t;
  const K half_c = frac<K>(1, 2) * c;

  std::vector<std::string> names;
  names.push_back("T");
  names.push_back("Y1");
  for (std::size_t k = 2; k <= n - 1; ++k) {
    names.push_back("X" + std::to_string(k));
    names.push_back("Y" + std::to_string(k));
  }
  names.push_back("Z0");

  LieAlgebra<K> g(dim, names);
  g.set_bracket(0, 1, {{1, half_c}, {z, -s}});
  for (std::size_t k = 2; k <= n - 1; ++k) {
    const std::size_t xk = 2 * k - 2, yk = 2 * k - 1;
    g.set_bracket(0, xk, {{xk, half_c}});
    g.set_bracket(0, yk, {{yk, half_c}});
    g.set_bracket(xk, yk, {{z, K(1)}});
  }
  g.set_bracket(0, z, {{z, c}});

  return {MetricLieAlgebra<K>(std::move(g)), n, theta};
}

/// Closed form of the Ricci operator on the ordered basis of s(theta):
/// diagonal -(1/4)(2+(2n-1)cos^2) on T and on each of X_2..Y_{n-1},
/// -(1/4)(2+(2n-3)cos^2) on Y_1, (1/2)((n-1)-2n cos^2) on Z_0, and the
/// symmetric pair (Y_1, Z_0) = (n/2) sin cos. This is the oracle the generic
/// engine is tested against.
template <class K>
Mat<K> ricci_closed_form(std::size_t n, const AnglePair<K>& theta) {
  if (n < 2) throw ParameterError("hypersurface family requires n >= 2");
  const std::size_t dim = 2 * n - 1;
  const std::size_t z = dim - 1;
  const K c2 = theta.cos_t * theta.cos_t;
  const K nn = frac<K>(static_cast<long long>(n));

  Mat<K> ric(dim, dim);
  const K generic = frac<K>(-1, 4) * (K(2) + (K(2) * nn - K(1)) * c2);
  for (std::size_t i = 0; i < z; ++i) ric(i, i) = generic;
  ric(1, 1) = frac<K>(-1, 4) * (K(2) + (K(2) * nn - K(3)) * c2);
  ric(z, z) = frac<K>(1, 2) * ((nn - K(1)) - K(2) * nn * c2);
  const K cross = frac<K>(1, 2) * nn * theta.sin_t * theta.cos_t;
  ric(1, z) = cross;
  ric(z, 1) = cross;
  return ric;
}

//------------------------------------------------------------------------------
// Small companion families
//------------------------------------------------------------------------------

template <class K>
struct RAlphaAlgebra {
  MetricLieAlgebra<K> metric_algebra;  // basis {A, X, Y}
  bool alpha_in_stated_range;          // alpha in [-1, 1]
};

/// Brackets [A, X] = X, [A, Y] = alpha Y. Values of alpha outside [-1, 1]
/// are accepted but flagged.
template <class K>
RAlphaAlgebra<K> build_r_alpha(const K& alpha) {
  LieAlgebra<K> g(3, {"A", "X", "Y"});
  g.set_bracket(0, 1, {{1, K(1)}});
  g.set_bracket(0, 2, {{2, alpha}});
  return {MetricLieAlgebra<K>(std::move(g)), alpha >= K(-1) && alpha <= K(1)};
}

/// Heisenberg algebra of odd dimension m: basis {X_1, Y_1, ..., X_p, Y_p, Z}
/// with p = (m-1)/2 and the only brackets [X_k, Y_k] = Z.
template <class K>
MetricLieAlgebra<K> build_heisenberg(std::size_t m) {
  if (m < 3 || m % 2 == 0)
    throw ParameterError("Heisenberg dimension must be odd and >= 3, got " + std::to_string(m));
  const std::size_t p = (m - 1) / 2;

  std::vector<std::string> names;
  for (std::size_t k = 1; k <= p; ++k) {
    names.push_back("X" + std::to_string(k));
    names.push_back("Y" + std::to_string(k));
  }
  names.push_back("Z");

  LieAlgebra<K> g(m, names);
  for (std::size_t k = 1; k <= p; ++k) g.set_bracket(2 * k - 2, 2 * k - 1, {{m - 1, K(1)}});
  return MetricLieAlgebra<K>(std::move(g));
}

} // namespace ricsol
