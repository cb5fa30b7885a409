#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ricsol/catalog.hpp>
#include <ricsol/derivations.hpp>

#include "test_support.hpp"

using namespace ricsol;
using ricsol::testing::entry_gap;

namespace {

// max |leibniz defect| as a double
template <class K>
double defect(const MetricLieAlgebra<K>& m, const Mat<K>& d) {
  return FieldTraits<K>::to_double(leibniz_residual(m, d));
}

}  // namespace

//---------------------------------------------------------------------------
// dimensions against known answers
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("abelian algebras admit every matrix", K, double, Rational) {
  CHECK(derivation_basis(testing::abelian<K>(2)).dimension == 4);
  CHECK(derivation_basis(testing::abelian<K>(3)).dimension == 9);
}

TEST_CASE_TEMPLATE("heisenberg derivation algebra", K, double, Rational) {
  // Der(h_3) = { [[a, b, 0], [c, d, 0], [e, f, a+d]] }: dimension 6,
  // last column confined to Z, corner entry equal to the trace of the block.
  const auto m = build_heisenberg<K>(3);
  const auto der = derivation_basis(m);
  CHECK(der.dimension == 6);
  const double tol = FieldTraits<K>::exact ? 0.0 : 1e-12;
  CHECK(FieldTraits<K>::to_double(der.max_leibniz_residual) <= tol);
  for (const auto& d : der.basis) {
    CHECK(FieldTraits<K>::to_double(field_abs(d(0, 2))) <= tol);
    CHECK(FieldTraits<K>::to_double(field_abs(d(1, 2))) <= tol);
    const K corner = d(2, 2) - d(0, 0) - d(1, 1);
    CHECK(FieldTraits<K>::to_double(field_abs(corner)) <= tol);
    CHECK(defect(m, d) <= tol);
  }
}

TEST_CASE("so3 derivations are exactly the inner ones") {
  const auto der = derivation_basis(testing::compact_so3<Rational>());
  CHECK(der.dimension == 3);
  // semisimple: every derivation is skew in this basis
  for (const auto& d : der.basis) CHECK(entry_gap(d, d.transpose() * Rational(-1)) == 0.0);
}

TEST_CASE_TEMPLATE("modes agree on hypersurface derivation dimensions", K, double, Rational) {
  // counts confirmed by an independent rational elimination
  const std::size_t expected[] = {4, 11, 22};
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto hs =
        build_lie_hypersurface<K>(n, angle_from_pair<K>(frac<K>(3, 5), frac<K>(4, 5)));
    CHECK(derivation_basis(hs.metric_algebra).dimension == expected[n - 2]);
  }
}

//---------------------------------------------------------------------------
// structural constraints on the hypersurface family
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("away from the right angle, derivations kill the (Y1, Z0) slot",
                   K, double, Rational) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& theta : testing::rational_angles<K>()) {
      if (theta.cos_t == K(0)) continue;  // constraint not claimed at pi/2
      const auto hs = build_lie_hypersurface<K>(n, theta);
      const auto der = derivation_basis(hs.metric_algebra);
      for (const auto& d : der.basis) {
        const double v =
            FieldTraits<K>::to_double(field_abs(d(hs.y_index(1), hs.z_index())));
        CHECK(v <= (FieldTraits<K>::exact ? 0.0 : 1e-10));
      }
    }
}

TEST_CASE("flat-angle trace relations, exact") {
  // at theta = 0: <D T, T> = 0 and the X/Y diagonal pairs sum to the Z entry
  for (std::size_t n : {3, 4}) {
    const auto hs =
        build_lie_hypersurface<Rational>(n, angle_from_pair<Rational>(Rational(1), Rational(0)));
    const auto der = derivation_basis(hs.metric_algebra);
    for (const auto& d : der.basis) {
      CHECK(d(0, 0) == Rational(0));
      for (std::size_t k = 2; k <= n - 1; ++k) {
        const Rational sum = d(hs.x_index(k), hs.x_index(k)) + d(hs.y_index(k), hs.y_index(k));
        CHECK(sum == d(hs.z_index(), hs.z_index()));
      }
    }
  }
}

TEST_CASE_TEMPLATE("horosphere scaling map is a derivation, identity is not", K, double, Rational) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto m = testing::right_angle_hypersurface<K>(n);
    CHECK(defect(m, testing::horosphere_derivation<K>(n)) <=
          (FieldTraits<K>::exact ? 0.0 : 1e-14));
    // id[X,Y] - [X,Y] - [X,Y] = -[X,Y]: defect 1 at the Heisenberg pair
    CHECK(defect(m, Mat<K>::identity(2 * n - 1)) == 1.0);
  }
}

//---------------------------------------------------------------------------
// algebraic properties of the computed space
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("derivations close under commutator", K, double, Rational) {
  std::vector<MetricLieAlgebra<K>> algebras;
  algebras.push_back(build_heisenberg<K>(5));
  algebras.push_back(
      build_lie_hypersurface<K>(2, angle_from_pair<K>(frac<K>(4, 5), frac<K>(3, 5))).metric_algebra);
  algebras.push_back(build_r_alpha<K>(frac<K>(-1, 2)).metric_algebra);

  for (const auto& m : algebras) {
    const auto der = derivation_basis(m);
    for (std::size_t a = 0; a < der.dimension; ++a)
      for (std::size_t b = a + 1; b < der.dimension; ++b) {
        const Mat<K> comm = der.basis[a] * der.basis[b] - der.basis[b] * der.basis[a];
        CHECK(defect(m, comm) <= (FieldTraits<K>::exact ? 0.0 : 1e-11));
      }
  }
}

TEST_CASE("derivations ignore the metric") {
  // same bracket, rescaled gram: same space
  const auto g = build_heisenberg<Rational>(3).algebra;
  const MetricLieAlgebra<Rational> scaled(g, Mat<Rational>::identity(3) * Rational(4));
  const auto a = derivation_basis(build_heisenberg<Rational>(3));
  const auto b = derivation_basis(scaled);
  REQUIRE(a.dimension == b.dimension);
  for (std::size_t k = 0; k < a.dimension; ++k) CHECK(entry_gap(a.basis[k], b.basis[k]) == 0.0);
}

TEST_CASE("leibniz_residual rejects shape mismatches") {
  const auto m = build_heisenberg<double>(3);
  CHECK_THROWS_AS(leibniz_residual(m, Mat<double>::identity(2)), StructuralError);
}

TEST_CASE("exact basis is canonical across equivalent inputs") {
  // RREF canonicalization: recomputing gives the identical list
  const auto m = build_lie_hypersurface<Rational>(
                     3, angle_from_pair<Rational>(Rational(5, 13), Rational(12, 13)))
                     .metric_algebra;
  const auto a = derivation_basis(m);
  const auto b = derivation_basis(m);
  REQUIRE(a.dimension == b.dimension);
  for (std::size_t k = 0; k < a.dimension; ++k) CHECK(a.basis[k] == b.basis[k]);
}
