#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ricsol/catalog.hpp>
#include <ricsol/classify.hpp>
#include <ricsol/structure.hpp>

#include "test_support.hpp"

#include <numeric>

using namespace ricsol;

namespace {

std::vector<std::size_t> identity_order(std::size_t dim) {
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

//---------------------------------------------------------------------------
// derived series
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("derived series of the standard examples", K, double, Rational) {
  using Dims = std::vector<std::size_t>;
  CHECK(derived_series(testing::abelian<K>(3)) == Dims{3, 0});
  CHECK(derived_series(build_heisenberg<K>(3)) == Dims{3, 1, 0});
  CHECK(derived_series(build_heisenberg<K>(7)) == Dims{7, 1, 0});
  CHECK(derived_series(build_solvable_model<K>(3).metric_algebra) == Dims{6, 5, 1, 0});
  CHECK(derived_series(build_r_alpha<K>(frac<K>(-1, 2)).metric_algebra) == Dims{3, 2, 0});

  // interior angle: commutator ideal spans everything below T
  const auto interior =
      build_lie_hypersurface<K>(3, angle_from_pair<K>(frac<K>(3, 5), frac<K>(4, 5)));
  CHECK(derived_series(interior.metric_algebra) == Dims{5, 4, 1, 0});
  // flat angle keeps the same shape for n = 3
  const auto flat = build_lie_hypersurface<K>(3, angle_from_pair<K>(frac<K>(1), frac<K>(0)));
  CHECK(derived_series(flat.metric_algebra) == Dims{5, 4, 1, 0});
  // right angle collapses the commutator ideal to the center
  CHECK(derived_series(testing::right_angle_hypersurface<K>(3)) == Dims{5, 1, 0});
  CHECK(derived_series(testing::right_angle_hypersurface<K>(2)) == Dims{3, 1, 0});

  // so3 is perfect: the series stalls at full dimension
  CHECK(derived_series(testing::compact_so3<K>()) == Dims{3, 3});
}

//---------------------------------------------------------------------------
// triangularity witness
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("the written hypersurface order is already triangular", K, double, Rational) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& theta : testing::rational_angles<K>()) {
      const auto hs = build_lie_hypersurface<K>(n, theta);
      const auto wit =
          triangularity_witness(hs.metric_algebra, identity_order(2 * n - 1));
      REQUIRE(wit.found);
      CHECK(*wit.order == identity_order(2 * n - 1));
    }
}

TEST_CASE("explicit orders are checked strictly, the search runs without one") {
  const auto hs = build_lie_hypersurface<Rational>(
      2, angle_from_pair<Rational>(Rational(3, 5), Rational(4, 5)));
  const auto& m = hs.metric_algebra;

  // reversed order is not triangular and is reported as such, no fallback
  CHECK_FALSE(triangularity_witness(m, std::vector<std::size_t>{2, 1, 0}).found);

  // the unconstrained search finds some order, and that order passes strictly
  const auto wit = triangularity_witness(m);
  REQUIRE(wit.found);
  const auto again = triangularity_witness(m, *wit.order);
  REQUIRE(again.found);
  CHECK(*again.order == *wit.order);
}

TEST_CASE_TEMPLATE("rotations admit no triangular basis", K, double, Rational) {
  const auto m = testing::rotation_algebra<K>();
  const auto wit = triangularity_witness(m);
  CHECK_FALSE(wit.found);
  CHECK_FALSE(wit.order.has_value());
  // and an explicit order cannot rescue it
  CHECK_FALSE(triangularity_witness(m, identity_order(3)).found);
}

TEST_CASE("order validation") {
  const auto m = build_heisenberg<double>(3);
  CHECK_THROWS_AS(triangularity_witness(m, std::vector<std::size_t>{0, 1}),
                  ParameterError);
  CHECK_THROWS_AS(triangularity_witness(m, std::vector<std::size_t>{0, 1, 1}),
                  ParameterError);
  CHECK_THROWS_AS(triangularity_witness(m, std::vector<std::size_t>{0, 1, 7}),
                  ParameterError);
}

//---------------------------------------------------------------------------
// eigenvalue sampling
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("eigen sampling separates real from rotational spectra", K, double, Rational) {
  CHECK(eigen_sample_check(build_lie_hypersurface<K>(
                               3, angle_from_pair<K>(frac<K>(4, 5), frac<K>(3, 5)))
                               .metric_algebra));
  CHECK(eigen_sample_check(build_heisenberg<K>(5)));   // nilpotent: guard path
  CHECK(eigen_sample_check(testing::abelian<K>(3)));
  CHECK(eigen_sample_check(build_r_alpha<K>(frac<K>(1, 2)).metric_algebra));
  CHECK_FALSE(eigen_sample_check(testing::rotation_algebra<K>()));
}

TEST_CASE("eigen sampling is deterministic in the seed and validates input") {
  const auto m = testing::rotation_algebra<double>();
  CHECK(eigen_sample_check(m, 64, 1729) == eigen_sample_check(m, 64, 1729));
  CHECK_THROWS_AS(eigen_sample_check(m, 0, 1729), ParameterError);
}

//---------------------------------------------------------------------------
// assembled report
//---------------------------------------------------------------------------

TEST_CASE_TEMPLATE("structure report on the hypersurface family", K, double, Rational) {
  const auto hs =
      build_lie_hypersurface<K>(3, angle_from_pair<K>(frac<K>(5, 13), frac<K>(12, 13)));
  const auto rep = structure_report(hs.metric_algebra);
  CHECK(rep.derived_series_dims == std::vector<std::size_t>{5, 4, 1, 0});
  CHECK(rep.solvable);
  CHECK(rep.triangular_basis_found);
  CHECK(rep.eigen_sample_real);
  CHECK(rep.samples_used == 64);
  CHECK(rep.completely_solvable_certified());
}

TEST_CASE("structure report flags the rotation counterexample") {
  const auto rep = structure_report(testing::rotation_algebra<double>());
  CHECK(rep.solvable);  // solvable, yet not triangularizable over the reals
  CHECK_FALSE(rep.triangular_basis_found);
  CHECK_FALSE(rep.eigen_sample_real);
  CHECK_FALSE(rep.completely_solvable_certified());
}

TEST_CASE("structure report respects an explicit order") {
  const auto m = testing::right_angle_hypersurface<Rational>(2);
  const auto rep = structure_report(m, identity_order(3));
  CHECK(rep.triangular_basis_found);
  REQUIRE(rep.triangular_order.has_value());
  CHECK(*rep.triangular_order == identity_order(3));
}

TEST_CASE_TEMPLATE("classification verdict scope tracks the certificates", K, double, Rational) {
  const auto rec = classify_hypersurface<K>(2, angle_from_pair<K>(frac<K>(0), frac<K>(1)));
  CHECK(rec.verdict_scope == "ricci-soliton");
  CHECK(rec.structure.solvable);
  CHECK(rec.structure.triangular_basis_found);
  CHECK(rec.soliton.status == SolitonStatus::Feasible);
  CHECK(rec.basis == std::vector<std::string>{"T", "Y1", "Z0"});
}

TEST_CASE("sweep assembles records in grid order") {
  const auto sweep = run_sweep<Rational>(2, 3, 3);
  CHECK(sweep.grid.type == "tan-half-angle");
  REQUIRE(sweep.grid.points.size() == 3);
  CHECK(sweep.grid.points[1].cos_t == Rational(3, 5));
  CHECK(sweep.grid.points[1].sin_t == Rational(4, 5));
  REQUIRE(sweep.records.size() == 6);
  CHECK(sweep.records[0].n == 2);
  CHECK(sweep.records[3].n == 3);
  // feasibility on the endpoints only (n = 2 row: both corners; n = 3: right angle)
  CHECK(sweep.records[0].soliton.status == SolitonStatus::Feasible);
  CHECK(sweep.records[1].soliton.status == SolitonStatus::Infeasible);
  CHECK(sweep.records[2].soliton.status == SolitonStatus::Feasible);
  CHECK(sweep.records[3].soliton.status == SolitonStatus::Infeasible);
  CHECK(sweep.records[5].soliton.status == SolitonStatus::Feasible);

  CHECK_THROWS_AS(run_sweep<Rational>(1, 2, 3), ParameterError);
  CHECK_THROWS_AS(run_sweep<Rational>(3, 2, 3), ParameterError);
  CHECK_THROWS_AS(make_theta_grid<Rational>(1), ParameterError);
}

TEST_CASE("float grid spans the quarter turn uniformly") {
  const auto grid = make_theta_grid<double>(5);
  CHECK(grid.type == "uniform-radians");
  REQUIRE(grid.points.size() == 5);
  CHECK(grid.points[0].radians() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(grid.points[2].radians() == doctest::Approx(0.7853981633974483).epsilon(1e-14));
  CHECK(grid.points[4].radians() == doctest::Approx(1.5707963267948966).epsilon(1e-14));
}
