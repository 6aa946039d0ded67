#include <doctest.h>

#include <cmath>
#include <numbers>

#include "losdof/geometry.hpp"
#include "oracles.hpp"

using namespace losdof;
using std::numbers::pi;

TEST_SUITE("geometry") {

TEST_CASE("array config rejects bad lengths") {
  CHECK_THROWS_AS(ArrayConfig(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ArrayConfig(10.0, -1.0), DomainError);
  CHECK_THROWS_AS(ArrayConfig(10.0, 20.0), DomainError);
  CHECK_THROWS_AS(ArrayConfig(10.0, 1.0, 0.0), DomainError);
  const ArrayConfig cfg(1000.0, 20.0, 0.01);
  CHECK(cfg.to_meters(100.0) == doctest::Approx(1.0));
  CHECK(cfg.to_per_meter(2.0) == doctest::Approx(200.0));
}

TEST_CASE("placement and orientation domains") {
  CHECK_THROWS_AS(Placement(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(Placement(10.0, 0.0), DomainError);
  CHECK_THROWS_AS(Placement(10.0, pi), DomainError);
  CHECK_THROWS_AS(Orientation(Vector3<double>(1.0, 1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(Orientation::normalized(Vector3<double>::Zero()), DomainError);
  const Orientation o(Vector3<double>(-1.0, 0.0, 0.0));
  CHECK(o.x() == 1.0);
  CHECK(Orientation::normalized(Vector3<double>(0.0, 3.0, 4.0)).z() == doctest::Approx(0.8));
}

TEST_CASE("validity classification") {
  const ArrayConfig cfg(1000.0, 20.0);
  CHECK(classify(Placement(20.0, pi / 2), cfg) == Validity::valid);
  CHECK(classify(Placement(19.999, pi / 2), cfg) == Validity::marginal);
  CHECK(classify(Placement(9.999, pi / 2), cfg) == Validity::invalid);
  // Near the array axis the bound grows like 1/sin(theta).
  CHECK(classify(Placement(100.0, 0.1), cfg) == Validity::marginal);
  CHECK(classify(Placement(201.0, 0.1), cfg) == Validity::valid);
  CHECK(classify(Placement(15.0, pi / 2), cfg, 5.0) == Validity::valid);
  CHECK(std::string(to_string(Validity::marginal)) == "marginal");
}

TEST_CASE("source and receiver points") {
  const ArrayConfig cfg(100.0, 10.0);
  const Placement p(50.0, pi / 3);
  const auto s = source_point(10.0, p, cfg);
  CHECK(s.x() == doctest::Approx(-50.0 * std::sin(pi / 3)));
  CHECK(s.y() == 0.0);
  CHECK(s.z() == doctest::Approx(-50.0 * std::cos(pi / 3) + 10.0));
  CHECK_THROWS_AS(source_point(50.1, p, cfg), DomainError);
  CHECK_THROWS_AS(receiver_point(5.1, Orientation::e_z(), cfg), DomainError);
  CHECK(receiver_point(2.0, Orientation::e_x(), cfg).x() == 2.0);
}

TEST_CASE("spatial frequency matches the direct formula and stays within [-1, 1]") {
  const ArrayConfig cfg(1000.0, 20.0);
  oracle::Sphere sphere(11);
  for (int i = 0; i < 200; ++i) {
    const auto v = sphere();
    const double theta = 0.05 + 3.0 * (i / 200.0);
    const Placement p(30.0 + 5.0 * i, theta);
    const Orientation o(Vector3<double>(v[0], v[1], v[2]));
    const double l = -10.0 + 0.1 * i;
    const double q = -500.0 + 5.0 * i;
    // The orientation is canonicalized to v_x >= 0, which flips the sign of l * v.
    const double sign = v[0] < 0 ? -1.0 : 1.0;
    const double expect = sign * oracle::kappa(sign * l, q, p.radius(), theta, v);
    const double k = spatial_frequency(l, q, p, o, cfg);
    REQUIRE(k == doctest::Approx(expect).epsilon(1e-12));
    REQUIRE(std::abs(k) <= 1.0);
  }
}

TEST_CASE("geometry templates accept long double") {
  const ArrayConfig cfg(100.0, 10.0);
  const BasicPlacement<long double> p(40.0L, 1.0L);
  const auto o = BasicOrientation<long double>::e_z();
  const long double k = spatial_frequency(0.0L, 0.0L, p, o, cfg);
  CHECK(static_cast<double>(k) == doctest::Approx(std::cos(1.0)));
}

TEST_CASE("projection direction is perpendicular to the center line") {
  for (double t : {0.1, 0.7, pi / 2, 2.5}) {
    const auto u = projection_direction(t);
    const Vector3<double> line(std::sin(t), 0.0, std::cos(t));
    CHECK(std::abs(u.dot(line)) < 1e-15);
    CHECK(u.norm() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(projection_direction(0.0), DomainError);
}

TEST_CASE("GCS to LCS rotation") {
  for (double psi : {0.0, 0.3, pi / 2}) {
    const auto q = gcs_to_lcs(psi);
    CHECK((q * q.transpose() - Matrix3<double>::Identity()).norm() < 1e-15);
    CHECK(q.determinant() == doctest::Approx(1.0));
    // The ground X axis is the source array direction, the LCS z axis.
    CHECK((q * Vector3<double>::UnitX() - Vector3<double>::UnitZ()).norm() < 1e-15);
  }
  const auto d = gcs_direction(pi / 2, 0.0);
  CHECK(d.x() == doctest::Approx(1.0));
  CHECK(std::abs(d.z()) < 1e-15);
}

TEST_CASE("ground placement") {
  const auto g = placement_from_ground({4500.0, 3000.0, 2000.0});
  const double r = std::sqrt(4500.0 * 4500.0 + 3000.0 * 3000.0 + 2000.0 * 2000.0);
  CHECK(g.placement.radius() == doctest::Approx(r));
  CHECK(std::cos(g.placement.polar_angle()) == doctest::Approx(3000.0 / r));
  CHECK(std::sin(g.psi) == doctest::Approx(4500.0 / std::hypot(4500.0, 2000.0)));
  CHECK(std::cos(g.psi) == doctest::Approx(2000.0 / std::hypot(4500.0, 2000.0)));
  CHECK(placement_from_ground({4500.0, 0.0, 0.0}).psi == doctest::Approx(pi / 2));
  CHECK_THROWS_AS(placement_from_ground({4500.0, 0.0, -1.0}), DomainError);
  CHECK_THROWS_AS(placement_from_ground({0.0, 0.0, 1.0}), DomainError);

  // The receiver-to-source geometry agrees in both frames.
  const double psi = g.psi;
  const Vector3<double> vg = gcs_direction(1.1, 0.4);
  const auto v = lcs_from_gcs(vg, psi);
  const Vector3<double> to_center_gcs(-3000.0, -2000.0, 4500.0);
  const Vector3<double> to_center_lcs(-r * std::sin(g.placement.polar_angle()), 0.0,
                                     -r * std::cos(g.placement.polar_angle()));
  const double sign = v.direction().dot(gcs_to_lcs(psi) * vg) > 0 ? 1.0 : -1.0;
  CHECK(sign * v.direction().dot(to_center_lcs) == doctest::Approx(vg.dot(to_center_gcs)));
}

}
