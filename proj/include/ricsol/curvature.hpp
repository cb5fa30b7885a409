#pragma once

#include "ricsol/algebra.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ricsol {

//------------------------------------------------------------------------------
// Curvature of a metric Lie algebra
//------------------------------------------------------------------------------

/// nabla[i](k, j) = k-th coordinate of the covariant derivative of frame
/// vector j along frame vector i. For a non-identity gram the frame is the
/// orthogonalized one; weights holds the squared frame norms (all 1 when the
/// stored basis was already orthonormal).
template <class K>
struct ConnectionCoefficients {
  std::vector<Mat<K>> nabla;
  Vec<K> weights;
};

/// Rank-4 curvature components R_{ijkl} = <R(F_i, F_j)F_k, F_l> in the
/// orthogonal frame, stored densely.
template <class K>
class RiemannTensor {
public:
  explicit RiemannTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim * dim, K(0)) {}

  std::size_t dim() const { return dim_; }
  K& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const K& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

private:
  std::size_t dim_;
  std::vector<K> data_;
};

/// Full curvature data. connection and riemann are frame quantities; ricci
/// is the operator matrix in the stored basis, entry (i, j) = coefficient of
/// E_i in Ric(E_j). With the identity gram the frame is the stored basis and
/// the distinction disappears.
template <class K>
struct CurvatureReport {
  ConnectionCoefficients<K> connection;
  RiemannTensor<K> riemann;
  Mat<K> ricci;
  K scalar;
};

namespace detail {

/// Connection in an orthogonal frame with squared norms d: the Koszul
/// formula 2<nabla_a b, c> = s_abc + s_cab + s_cba over the frame structure
/// constants s_abc = <[F_a, F_b], F_c>.
template <class K>
ConnectionCoefficients<K> frame_connection(const LieAlgebra<K>& g, const Vec<K>& d) {
  const std::size_t dim = g.dim();

  // bk(a, b) for a < b; s_abc = bk(a,b)[c] * d[c], extended antisymmetrically
  std::vector<Vec<K>> bk(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) bk[a * dim + b] = g.bracket_basis(a, b);
  auto s = [&](std::size_t a, std::size_t b, std::size_t c) -> K {
    if (a == b) return K(0);
    if (a < b) return bk[a * dim + b][c] * d[c];
    return -(bk[b * dim + a][c] * d[c]);
  };

  ConnectionCoefficients<K> conn;
  conn.weights = d;
  conn.nabla.assign(dim, Mat<K>(dim, dim));
  const K half = frac<K>(1, 2);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        K num = s(a, b, c) + s(c, a, b) + s(c, b, a);
        if (num != K(0)) conn.nabla[a](c, b) = half * num / d[c];
      }
  return conn;
}

} // namespace detail

/// Curvature with the sign convention R(X, Y) = nabla_[X,Y] - nabla_X
/// nabla_Y + nabla_Y nabla_X and Ricci contraction Ric(X) = sum_i R(E_i, X)
/// E_i over an orthonormal {E_i}; for a weighted frame each term carries
/// 1/d_i. The caller is expected to have validated m.
template <class K>
CurvatureReport<K> curvature_report(const MetricLieAlgebra<K>& m) {
  const std::size_t dim = m.dim();
  const bool orthonormal = m.gram == Mat<K>::identity(dim);

  const LieAlgebra<K>* g = &m.algebra;
  Vec<K> d(dim, K(1));
  std::optional<OrthonormalFrame<K>> frame;
  if (!orthonormal) {
    frame = orthonormalize(m);
    g = &frame->algebra.algebra;
    for (std::size_t i = 0; i < dim; ++i) d[i] = frame->algebra.gram(i, i);
  }

  ConnectionCoefficients<K> conn = detail::frame_connection(*g, d);
  const std::vector<Mat<K>>& n = conn.nabla;

  RiemannTensor<K> rie(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Vec<K> ab = g->bracket_basis(a, b);
      Mat<K> r = n[b] * n[a] - (n[a] * n[b]);
      for (std::size_t c = 0; c < dim; ++c)
        if (ab[c] != K(0)) r += ab[c] * n[c];
      for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t l = 0; l < dim; ++l) {
          K v = r(l, c) * d[l];
          rie.at(a, b, c, l) = v;
          rie.at(b, a, c, l) = -v;
        }
    }

  // ric_F(k, j) = sum_a R_{ajak} / (d_a d_k)
  Mat<K> ric_f(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j) {
      K acc(0);
      for (std::size_t a = 0; a < dim; ++a) {
        const K& v = rie.at(a, j, a, k);
        if (v != K(0)) acc += v / d[a];
      }
      ric_f(k, j) = acc / d[k];
    }
  K scalar = ric_f.trace();

  Mat<K> ric = orthonormal ? ric_f : frame->to_frame * ric_f * frame->from_frame;
  return {std::move(conn), std::move(rie), std::move(ric), std::move(scalar)};
}

template <class K>
ConnectionCoefficients<K> connection(const MetricLieAlgebra<K>& m) {
  return curvature_report(m).connection;
}

template <class K>
Mat<K> ricci_operator(const MetricLieAlgebra<K>& m) {
  return curvature_report(m).ricci;
}

template <class K>
K scalar_curvature(const MetricLieAlgebra<K>& m) {
  return curvature_report(m).scalar;
}

} // namespace ricsol
