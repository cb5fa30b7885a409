#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ricsol/algebra.hpp>
#include <ricsol/catalog.hpp>
#include <ricsol/linalg.hpp>

#include "test_support.hpp"

using namespace ricsol;
using ricsol::testing::CoeffStream;
using ricsol::testing::entry_gap;

//---------------------------------------------------------------------------
// structure constant table
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("bracket table accumulates terms and drops zeros", K, double, Rational) {
  LieAlgebra<K> g(3, {"A", "B", "C"});
  g.set_bracket(0, 1, {{2, K(1)}, {2, K(2)}, {1, K(0)}});
  CHECK(g.structure_constant(0, 1, 2) == K(3));
  CHECK(g.structure_constant(0, 1, 1) == K(0));

  // overwriting with all-zero terms clears the pair entirely
  g.set_bracket(0, 1, {{2, K(0)}});
  CHECK(is_zero_vec(g.bracket_basis(0, 1)));
}

TEST_CASE_TEMPLATE("structure constants are antisymmetric in the pair", K, double, Rational) {
  LieAlgebra<K> g(3);
  g.set_bracket(0, 1, {{2, frac<K>(5, 2)}});
  CHECK(g.structure_constant(1, 0, 2) == frac<K>(-5, 2));
  CHECK(g.structure_constant(0, 0, 2) == K(0));
}

TEST_CASE("bracket table rejects malformed input") {
  LieAlgebra<double> g(3);
  CHECK_THROWS_AS(g.set_bracket(1, 1, {{0, 1.0}}), StructuralError);
  CHECK_THROWS_AS(g.set_bracket(2, 1, {{0, 1.0}}), StructuralError);
  CHECK_THROWS_AS(g.set_bracket(0, 3, {{0, 1.0}}), StructuralError);
  CHECK_THROWS_AS(g.set_bracket(0, 1, {{3, 1.0}}), StructuralError);
  CHECK_THROWS_AS(LieAlgebra<double>(0), StructuralError);
  CHECK_THROWS_AS(LieAlgebra<double>(3, {"A", "B"}), StructuralError);
}

TEST_CASE_TEMPLATE("bracket is bilinear and antisymmetric on vectors", K, double, Rational) {
  const auto m = testing::right_angle_hypersurface<K>(3);
  const LieAlgebra<K>& g = m.algebra;
  CoeffStream coeffs(17);
  const double tol = FieldTraits<K>::exact ? 0.0 : 1e-12;

  for (int trial = 0; trial < 8; ++trial) {
    const Vec<K> x = coeffs.next_vec<K>(g.dim());
    const Vec<K> y = coeffs.next_vec<K>(g.dim());
    const Vec<K> z = coeffs.next_vec<K>(g.dim());
    const K a = coeffs.next<K>();

    // [x + a z, y] = [x, y] + a [z, y]
    const Vec<K> xy = g.bracket(x, y);
    Vec<K> xaz = x;
    axpy(a, z, xaz);
    Vec<K> expanded = g.bracket(z, y);
    for (auto& v : expanded) v = v * a;
    for (std::size_t i = 0; i < xy.size(); ++i) expanded[i] = expanded[i] + xy[i];
    CHECK(FieldTraits<K>::to_double(max_abs(vec_sub(g.bracket(xaz, y), expanded))) <= tol);

    // [x, y] = -[y, x]
    Vec<K> anti = g.bracket(y, x);
    for (auto& v : anti) v = -v;
    CHECK(FieldTraits<K>::to_double(max_abs(vec_sub(g.bracket(x, y), anti))) <= tol);
  }
}

TEST_CASE_TEMPLATE("ad matrices reproduce the bracket", K, double, Rational) {
  const auto model = build_solvable_model<K>(2);
  const LieAlgebra<K>& g = model.metric_algebra.algebra;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Mat<K> ad = g.ad_basis(i);
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vec<K> e(g.dim(), K(0));
      e[j] = K(1);
      Vec<K> lhs = ad.apply(e);
      Vec<K> rhs = g.bracket_basis(i, j);
      CHECK(is_zero_vec(vec_sub(lhs, rhs)));
    }
  }
}

//---------------------------------------------------------------------------
// validation
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("catalog algebras validate cleanly", K, double, Rational) {
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(validate(build_solvable_model<K>(n).metric_algebra).ok);
    for (const auto& theta : testing::rational_angles<K>())
      CHECK(validate(build_lie_hypersurface<K>(n, theta).metric_algebra).ok);
  }
  CHECK(validate(build_heisenberg<K>(5)).ok);
  CHECK(validate(build_r_alpha<K>(frac<K>(-1, 2)).metric_algebra).ok);
  CHECK(validate(testing::compact_so3<K>()).ok);
}

TEST_CASE("a broken bracket table fails Jacobi with a named triple") {
  // start from the solvable model and double the [A_0, Z_0] coefficient
  auto model = build_solvable_model<Rational>(2);
  LieAlgebra<Rational> g = model.metric_algebra.algebra;
  g.set_bracket(0, 3, {{3, Rational(2)}});
  const auto rep = validate(MetricLieAlgebra<Rational>(std::move(g)));
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.jacobi_ok);
  CHECK(rep.max_jacobi_residual == Rational(1));
  REQUIRE(rep.messages.size() >= 1);
  CHECK(rep.messages.front() == "Jacobi identity fails at triple (A0, X1, Y1)");
}

TEST_CASE("gram defects are reported separately from Jacobi") {
  LieAlgebra<double> g(2);
  Mat<double> asym(2, 2);
  asym(0, 0) = 1.0;
  asym(0, 1) = 0.5;
  asym(1, 1) = 1.0;
  auto rep = validate(MetricLieAlgebra<double>(g, asym));
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.gram_symmetric);
  CHECK(rep.jacobi_ok);

  Mat<double> indef = Mat<double>::identity(2);
  indef(1, 1) = -1.0;
  rep = validate(MetricLieAlgebra<double>(g, indef));
  CHECK_FALSE(rep.ok);
  CHECK(rep.gram_symmetric);
  CHECK_FALSE(rep.gram_positive_definite);
}

TEST_CASE_TEMPLATE("positive definiteness agrees across modes", K, double, Rational) {
  CoeffStream coeffs(23);
  for (int trial = 0; trial < 20; ++trial) {
    // B^T B + t I is positive definite iff t > -lambda_min; t = 1 keeps it so,
    // t = -9 (below -||B||^2 would be needed for a clean flip) usually breaks it.
    Mat<Rational> b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = coeffs.next_rational();
    Mat<Rational> spd = b.transpose() * b + Mat<Rational>::identity(3);
    CHECK(gram_positive_definite(spd));

    Mat<Rational> shifted = spd - Mat<Rational>::identity(3) * Rational(1000);
    CHECK_FALSE(gram_positive_definite(shifted));

    // float path sees the same verdicts
    Mat<double> spd_f(3, 3), shifted_f(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        spd_f(i, j) = FieldTraits<Rational>::to_double(spd(i, j));
        shifted_f(i, j) = FieldTraits<Rational>::to_double(shifted(i, j));
      }
    CHECK(gram_positive_definite(spd_f));
    CHECK_FALSE(gram_positive_definite(shifted_f));
  }
}

//---------------------------------------------------------------------------
// orthonormalization
//---------------------------------------------------------------------------

TEST_CASE("exact orthonormalization rescales perfect squares and keeps weights otherwise") {
  LieAlgebra<Rational> g(3, {"X", "Y", "Z"});
  g.set_bracket(0, 1, {{2, Rational(1)}});

  Mat<Rational> gram = Mat<Rational>::identity(3);
  gram(2, 2) = Rational(4);
  auto frame = orthonormalize(MetricLieAlgebra<Rational>(g, gram));
  // Z column is halved, weight folds back to 1
  CHECK(frame.to_frame(2, 2) == Rational(1, 2));
  CHECK(frame.algebra.gram(2, 2) == Rational(1));
  // frame bracket: [X, Y] = Z = 2 (Z/2)
  CHECK(frame.algebra.algebra.structure_constant(0, 1, 2) == Rational(2));

  gram(2, 2) = Rational(2);  // not a perfect square, weight must survive
  frame = orthonormalize(MetricLieAlgebra<Rational>(g, gram));
  CHECK(frame.to_frame(2, 2) == Rational(1));
  CHECK(frame.algebra.gram(2, 2) == Rational(2));
}

TEST_CASE("orthonormalization diagonalizes a coupled gram") {
  LieAlgebra<Rational> g(2, {"A", "B"});
  Mat<Rational> gram(2, 2);
  gram(0, 0) = Rational(2);
  gram(0, 1) = Rational(1);
  gram(1, 0) = Rational(1);
  gram(1, 1) = Rational(1);
  const auto frame = orthonormalize(MetricLieAlgebra<Rational>(g, gram));

  // recompute B^T G B and confirm it matches the frame's diagonal gram
  const Mat<Rational> check = frame.to_frame.transpose() * gram * frame.to_frame;
  CHECK(check == frame.algebra.gram);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (i != j) CHECK(check(i, j) == Rational(0));
  // to_frame and from_frame invert each other
  CHECK(frame.to_frame * frame.from_frame == Mat<Rational>::identity(2));
}

TEST_CASE("float orthonormalization produces a unit frame") {
  LieAlgebra<double> g(2);
  Mat<double> gram(2, 2);
  gram(0, 0) = 2.0;
  gram(0, 1) = 1.0;
  gram(1, 0) = 1.0;
  gram(1, 1) = 1.0;
  const auto frame = orthonormalize(MetricLieAlgebra<double>(g, gram));
  const Mat<double> check = frame.to_frame.transpose() * gram * frame.to_frame;
  CHECK(entry_gap(check, Mat<double>::identity(2)) <= 1e-12);
}

TEST_CASE("orthonormalization rejects unusable grams") {
  LieAlgebra<Rational> g(2);
  Mat<Rational> bad(2, 2);
  bad(0, 0) = Rational(1);
  bad(0, 1) = Rational(2);
  bad(1, 0) = Rational(2);
  bad(1, 1) = Rational(1);  // eigenvalues 3, -1
  CHECK_THROWS_AS(orthonormalize(MetricLieAlgebra<Rational>(g, bad)),
                  MetricError);

  LieAlgebra<double> gf(2);
  Mat<double> badf(2, 2);
  badf(0, 0) = 1.0;
  badf(0, 1) = 2.0;
  badf(1, 0) = 2.0;
  badf(1, 1) = 1.0;
  CHECK_THROWS_AS(orthonormalize(MetricLieAlgebra<double>(gf, badf)), MetricError);
}

TEST_CASE("metric shape mismatch is rejected at construction") {
  LieAlgebra<double> g(3);
  CHECK_THROWS_AS(MetricLieAlgebra<double>(g, Mat<double>::identity(2)),
                  StructuralError);
}
