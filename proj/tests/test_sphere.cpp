#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mono/sphere.hpp"

using namespace mono;
using Catch::Matchers::WithinAbs;

namespace
{

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b)
{
	return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

TEST_CASE("cartesian image lies on the sphere")
{
	std::mt19937_64 rng(1);
	std::uniform_real_distribution<double> th(0.01, kPi - 0.01), ph(0.0, 2 * kPi), rr(0.2, 3.0);
	for (int k = 0; k < 1000; ++k)
	{
		const SpherePoint p{rr(rng), th(rng), ph(rng)};
		const Vec3 x = p.cartesian();
		CHECK(std::abs(dot(x, x) - p.r * p.r) <= 1e-13 * std::max(1.0, p.r * p.r));
	}
	const Vec3 x = SpherePoint{2.0, kPi / 2, 0.0}.cartesian();
	CHECK_THAT(x[0], WithinAbs(2.0, 1e-15));
	CHECK_THAT(x[2], WithinAbs(0.0, 1e-15));
}

TEST_CASE("moving frame is orthonormal and right-handed")
{
	std::mt19937_64 rng(2);
	std::uniform_real_distribution<double> th(0.01, kPi - 0.01), ph(0.0, 2 * kPi);
	for (int k = 0; k < 1000; ++k)
	{
		const SpherePoint p{1.0, th(rng), ph(rng)};
		const Frame f = Frame::at(p);
		CHECK(std::abs(dot(f.e_r, f.e_r) - 1.0) <= 1e-13);
		CHECK(std::abs(dot(f.e_theta, f.e_theta) - 1.0) <= 1e-13);
		CHECK(std::abs(dot(f.e_phi, f.e_phi) - 1.0) <= 1e-13);
		CHECK(std::abs(dot(f.e_r, f.e_theta)) <= 1e-13);
		CHECK(std::abs(dot(f.e_r, f.e_phi)) <= 1e-13);
		CHECK(std::abs(dot(f.e_theta, f.e_phi)) <= 1e-13);
		const Vec3 c = cross(f.e_r, f.e_theta);
		for (std::size_t i = 0; i < 3; ++i)
			CHECK(std::abs(c[i] - f.e_phi[i]) <= 1e-13);
		CHECK_THAT(f.e_phi[0], WithinAbs(-std::sin(p.phi), 1e-15));
		CHECK_THAT(f.e_phi[1], WithinAbs(std::cos(p.phi), 1e-15));
		CHECK(f.e_phi[2] == 0.0);
	}
}

TEST_CASE("frame fields agree with the pointwise frame")
{
	const SpherePoint p{1.4, 1.1, 2.3};
	const JetContext c{p, 2, Chart::Spatial};
	const Frame f = Frame::at(p);
	for (int i = 0; i < 3; ++i)
	{
		const auto k = static_cast<std::size_t>(i);
		CHECK(std::abs(radial_unit(i)(c).value() - f.e_r[k]) < 1e-15);
		CHECK(std::abs(polar_unit(i)(c).value() - f.e_theta[k]) < 1e-15);
		CHECK(std::abs(azimuthal_unit(i)(c).value() - f.e_phi[k]) < 1e-15);
		CHECK(std::abs(cartesian_coordinate(i)(c).value() - p.cartesian()[k]) < 1e-14);
	}
	// d(e_r)/dtheta = e_theta.
	for (int i = 0; i < 3; ++i)
		CHECK(std::abs(radial_unit(i)(c).derivative({0, 1, 0}) - f.e_theta[static_cast<std::size_t>(i)]) < 1e-15);
}

TEST_CASE("make_grid shapes and domains")
{
	const Grid g = make_grid(3, 4, 0.3, GaugeDomain::Full);
	CHECK(g.points.size() == 12);
	for (const auto& p : g.points)
	{
		CHECK(p.theta >= 0.3 - 1e-15);
		CHECK(p.theta <= kPi - 0.3 + 1e-15);
	}

	const double a = kDefaultOverlapHalfwidth;
	const Grid north = make_grid(8, 8, 0.2, GaugeDomain::North);
	REQUIRE_FALSE(north.points.empty());
	for (const auto& p : north.points)
		CHECK(p.theta <= kPi / 2 + a);

	const Grid south = make_grid(8, 8, 0.2, GaugeDomain::South);
	REQUIRE_FALSE(south.points.empty());
	for (const auto& p : south.points)
		CHECK(p.theta >= kPi / 2 - a);

	const Grid overlap = make_grid(20, 40, 0.15, GaugeDomain::Overlap);
	REQUIRE_FALSE(overlap.points.empty());
	for (const auto& p : overlap.points)
	{
		CHECK(p.theta >= kPi / 2 - a);
		CHECK(p.theta <= kPi / 2 + a);
	}

	CHECK_THROWS(make_grid(0, 4, 0.3, GaugeDomain::Full));
	CHECK_THROWS(make_grid(3, 4, 2.0, GaugeDomain::Full));
	// A single theta row at the equator band edge cannot meet a tiny overlap.
	GridSpec tiny;
	tiny.n_theta = 2;
	tiny.theta_margin = 0.2;
	tiny.domain = GaugeDomain::Overlap;
	tiny.overlap_halfwidth = 0.01;
	CHECK_THROWS(make_grid(tiny));
}

TEST_CASE("grid jitter is seeded and stays in bounds")
{
	GridSpec spec;
	spec.n_theta = 10;
	spec.n_phi = 12;
	spec.domain = GaugeDomain::North;
	spec.jitter_seed = 99;
	const Grid a = make_grid(spec);
	const Grid b = make_grid(spec);
	REQUIRE(a.points.size() == b.points.size());
	for (std::size_t i = 0; i < a.points.size(); ++i)
		CHECK(a.points[i] == b.points[i]);
	for (const auto& p : a.points)
	{
		CHECK(p.theta >= spec.theta_margin);
		CHECK(in_domain(GaugeDomain::North, p.theta));
	}
	spec.jitter_seed = 100;
	const Grid c = make_grid(spec);
	bool differs = false;
	for (std::size_t i = 0; i < std::min(a.points.size(), c.points.size()); ++i)
		differs = differs || !(a.points[i] == c.points[i]);
	CHECK(differs);
}

TEST_CASE("test function catalog")
{
	const auto cat = test_function_catalog();
	CHECK(cat.size() >= 7);

	const SpherePoint p{1.0, 0.8, 0.3};
	const Jet one = cat.at(0).evaluate(JetContext{p, 2, Chart::Spatial});
	CHECK(cat.at(0).id == "one");
	CHECK(one.value() == Complex(1.0));
	CHECK(one.max_abs() == 1.0);

	bool found = false;
	for (const auto& f : cat)
		if (f.id == "exp(1i phi) sin^1 theta")
		{
			found = true;
			const Jet j = f.evaluate(JetContext{SpherePoint{1.0, kPi / 2, 0.0}, 1, Chart::Spatial});
			CHECK(std::abs(j.value() - 1.0) < 1e-15);
			CHECK(std::abs(j.derivative({0, 0, 1}) - Complex(0.0, 1.0)) < 1e-15);
			CHECK(std::abs(j.derivative({0, 1, 0})) < 1e-15);
		}
	CHECK(found);
}

TEST_CASE("catalog functions are single valued in phi")
{
	std::mt19937_64 rng(4);
	std::uniform_real_distribution<double> th(0.2, kPi - 0.2), ph(0.0, 2 * kPi);
	for (const auto& f : test_function_catalog())
		for (int k = 0; k < 20; ++k)
		{
			const double t = th(rng), q = ph(rng);
			const Complex a = f.evaluate(JetContext{SpherePoint{1.0, t, q}, 0, Chart::Surface}).value();
			const Complex b = f.evaluate(JetContext{SpherePoint{1.0, t, q + 2 * kPi}, 0, Chart::Surface}).value();
			CHECK(std::abs(a - b) <= 1e-13);
		}
}

TEST_CASE("random catalog member is determined by the seed")
{
	const SpherePoint p{1.0, 1.0, 1.0};
	const JetContext c{p, 0, Chart::Surface};
	const auto a = test_function_catalog(5).back().evaluate(c).value();
	const auto b = test_function_catalog(5).back().evaluate(c).value();
	const auto d = test_function_catalog(6).back().evaluate(c).value();
	CHECK(a == b);
	CHECK(a != d);
}
