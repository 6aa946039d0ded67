#include <doctest.h>

#include <cmath>
#include <numbers>

#include "losdof/exact_bandwidth.hpp"
#include "oracles.hpp"

using namespace losdof;
using std::numbers::pi;

namespace {

const ArrayConfig kFig(1000.0, 20.0);

}  // namespace

TEST_SUITE("exact_bandwidth") {

TEST_CASE("spatial frequency special cases") {
  const Placement p(300.0, pi / 3);
  CHECK(std::abs(spatial_frequency(0.0, 300.0 * std::cos(pi / 3), p, Orientation::e_z(), kFig)) < 1e-15);
  CHECK(spatial_frequency(0.0, 0.0, Placement(300.0, pi / 2), Orientation::e_x(), kFig) == doctest::Approx(1.0));
  for (double q : {-500.0, 0.0, 123.0}) CHECK(spatial_frequency(0.0, q, p, Orientation::e_y(), kFig) == 0.0);
}

TEST_CASE("e_z closed form against hand values") {
  CHECK(local_bandwidth_z(0.0, Placement(std::sqrt(3.0) / 2 * 1000.0, pi / 2), kFig).w ==
        doctest::Approx(1.0).epsilon(1e-12));
  // 1 / sqrt(100^2 + 1/4)
  CHECK(local_bandwidth_z(0.0, Placement(100000.0, pi / 2), kFig).w == doctest::Approx(0.009999875).epsilon(1e-8));
  const ArrayConfig huge(1e6, 1.0);
  for (double t : {0.3, pi / 2, 2.0})
    CHECK(local_bandwidth_z(0.0, Placement(10.0, t), huge).w == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("e_x closed form against hand values") {
  CHECK(local_bandwidth_x(0.0, Placement(10000.0, pi / 2), kFig).w == doctest::Approx(0.0012477).epsilon(1e-4));
  // The hand value 0.09976 carries rounding in its intermediate terms; the direct formula gives 0.0997447.
  const double w = local_bandwidth_x(0.0, Placement(5000.0, pi / 4), kFig).w;
  CHECK(w == doctest::Approx(0.09976).epsilon(5e-4));
  CHECK(w == doctest::Approx(oracle::wx(0.0, 5000.0, pi / 4, 1000.0)).epsilon(1e-12));
  const ArrayConfig huge(1e6, 1.0);
  CHECK(local_bandwidth_x(0.0, Placement(10.0, pi / 2), huge).w == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("closed forms match the direct formulas over random placements") {
  oracle::Sphere sphere(3);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> lr(-10.0, 10.0), t(0.02, pi - 0.02), logr(std::log(30.0), std::log(1e6));
  for (int i = 0; i < 500; ++i) {
    const double theta = t(gen);
    const double r = std::exp(logr(gen));
    const Placement p(r, theta);
    if (classify(p, kFig) != Validity::valid) continue;
    const double l = lr(gen);
    const auto z = local_bandwidth_z(l, p, kFig);
    const auto x = local_bandwidth_x(l, p, kFig);
    REQUIRE(z.w == doctest::Approx(oracle::wz(l, r, theta, 1000.0)).epsilon(1e-10));
    REQUIRE(x.w == doctest::Approx(oracle::wx(l, r, theta, 1000.0)).epsilon(1e-10));
    REQUIRE(z.kappa_max - z.kappa_min == doctest::Approx(z.w));
  }
}

TEST_CASE("numeric extremizers agree with the closed forms") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> lr(-10.0, 10.0), t(0.05, pi - 0.05), logr(std::log(50.0), std::log(1e5));
  for (int i = 0; i < 200; ++i) {
    const Placement p(std::exp(logr(gen)), t(gen));
    if (classify(p, kFig) != Validity::valid) continue;
    const double l = lr(gen);
    const double wz = local_bandwidth_z(l, p, kFig).w;
    const double wx = local_bandwidth_x(l, p, kFig).w;
    REQUIRE(local_bandwidth_general(l, p, Orientation::e_z(), kFig).w == doctest::Approx(wz).epsilon(1e-9));
    REQUIRE(local_bandwidth_general(l, p, Orientation::e_x(), kFig).w == doctest::Approx(wx).epsilon(1e-9));
    REQUIRE(local_bandwidth_stationary(l, p, Orientation::e_z(), kFig).w == doctest::Approx(wz).epsilon(1e-9));
    REQUIRE(local_bandwidth_stationary(l, p, Orientation::e_x(), kFig).w == doctest::Approx(wx).epsilon(1e-9));
  }
}

TEST_CASE("stationary-point extremizer matches dense sampling for arbitrary orientations") {
  oracle::Sphere sphere(21);
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> lr(-10.0, 10.0), t(0.05, pi - 0.05), logr(std::log(50.0), std::log(2e4));
  for (int i = 0; i < 200; ++i) {
    const auto v = sphere();
    const Placement p(std::exp(logr(gen)), t(gen));
    if (classify(p, kFig) != Validity::valid) continue;
    const double l = lr(gen);
    // Compare on the canonical direction so both sides see the same receiver point.
    const Orientation o(Vector3<double>(v[0], v[1], v[2]));
    const std::array<double, 3> c{o.x(), o.y(), o.z()};
    const double ref = oracle::w_dense(l, p.radius(), p.polar_angle(), c, 1000.0);
    const double ws = local_bandwidth_stationary(l, p, o, kFig).w;
    const double wg = local_bandwidth_general(l, p, o, kFig).w;
    REQUIRE(ws == doctest::Approx(ref).epsilon(1e-9).scale(1e-12));
    REQUIRE(wg == doctest::Approx(ref).epsilon(1e-9).scale(1e-12));
  }
}

TEST_CASE("e_y at the array center has zero bandwidth") {
  const Placement p(800.0, 1.0);
  CHECK(local_bandwidth_general(0.0, p, Orientation::e_y(), kFig).w == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(local_bandwidth_stationary(0.0, p, Orientation::e_y(), kFig).w == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("symmetry about theta = pi/2") {
  for (double t : {0.1, 0.4, 1.0, 1.4}) {
    for (double r : {60.0, 700.0, 5000.0}) {
      const Placement a(r, t), b(r, pi - t);
      CHECK(local_bandwidth_z(3.0, a, kFig).w == doctest::Approx(local_bandwidth_z(-3.0, b, kFig).w).epsilon(1e-12));
      CHECK(local_bandwidth_z(0.0, a, kFig).w == doctest::Approx(local_bandwidth_z(0.0, b, kFig).w).epsilon(1e-12));
      CHECK(local_bandwidth_x(0.0, a, kFig).w == doctest::Approx(local_bandwidth_x(0.0, b, kFig).w).epsilon(1e-12));
    }
  }
}

TEST_CASE("local evaluators reject invalid geometry") {
  CHECK_THROWS_AS(local_bandwidth_z(0.0, Placement(5.0, pi / 2), kFig), DomainError);
  CHECK_THROWS_AS(local_bandwidth_z(11.0, Placement(500.0, pi / 2), kFig), DomainError);
  CHECK_NOTHROW(local_bandwidth_z(0.0, Placement(15.0, pi / 2), kFig));  // marginal
}

TEST_CASE("K number against Simpson quadrature of the dense-sampling bandwidth") {
  const ArrayConfig cfg(1000.0, 20.0);
  oracle::Sphere sphere(31);
  std::mt19937_64 gen(32);
  std::uniform_real_distribution<double> t(0.1, pi - 0.1), logr(std::log(40.0), std::log(5e3));
  int checked = 0;
  while (checked < 12) {
    const auto v = sphere();
    const Placement p(std::exp(logr(gen)), t(gen));
    if (classify(p, cfg) != Validity::valid) continue;
    const Orientation o(Vector3<double>(v[0], v[1], v[2]));
    const std::array<double, 3> c{o.x(), o.y(), o.z()};
    const double ref = oracle::k_simpson(p.radius(), p.polar_angle(), c, 1000.0, 20.0);
    CHECK(k_number(p, o, cfg) == doctest::Approx(ref).epsilon(1e-5));
    ++checked;
  }
}

TEST_CASE("grid-search and stationary K numbers agree") {
  const Placement p(900.0, 0.9);
  const auto o = Orientation::normalized(Vector3<double>(0.3, -0.5, 0.8));
  KNumberOptions grid;
  grid.method = ExtremumMethod::grid_search;
  CHECK(k_number(p, o, kFig, grid) == doctest::Approx(k_number(p, o, kFig)).epsilon(1e-6));
}

TEST_CASE("K number at the far-range example") {
  const Placement p(4500.0, pi / 2);
  const double k = k_number(p, Orientation::e_z(), kFig);
  CHECK(k == doctest::Approx(local_bandwidth_z(0.0, p, kFig).w * 20.0).epsilon(5e-3));
  CHECK(k == doctest::Approx(4.4444).epsilon(5e-3));
  CHECK(k_number(p, Orientation::e_y(), kFig) < 0.01 * k);
  // A vanishing receiver length drives K to zero.
  CHECK(k_number(p, Orientation::e_z(), ArrayConfig(1000.0, 1e-9)) < 1e-9);
  CHECK_THROWS_AS(k_number(Placement(15.0, pi / 2), Orientation::e_z(), kFig), DomainError);
}

TEST_CASE("constant-bandwidth K") {
  CHECK(k_number_const(0.0, kFig) == 0.0);
  CHECK(k_number_const(2.0, kFig) == 40.0);
  CHECK(k_number_const(1000.0 / 4500.0, kFig) == doctest::Approx(4.444).epsilon(1e-3));
  CHECK_THROWS_AS(k_number_const(-1.0, kFig), DomainError);
}

}
