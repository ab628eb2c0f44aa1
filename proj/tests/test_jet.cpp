#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <random>

#include "mono/jet.hpp"

using namespace mono;
using Catch::Matchers::WithinAbs;

namespace
{

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Taylor coefficients of f(theta, phi) by the trapezoidal rule on a torus
/// of circles of radius rho around the base point. Exponentially accurate
/// for functions analytic on the polydisc. Roundoff is about eps * max|f|
/// amplified by rho^-(kt + kp).
Complex cauchy_coefficient(const std::function<Complex(Complex, Complex)>& f, Complex t0, Complex p0, int kt, int kp,
                           double rho = 0.25, int n = 48)
{
	Complex sum = 0.0;
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
		{
			const Complex wa = std::polar(1.0, kTwoPi * a / n);
			const Complex wb = std::polar(1.0, kTwoPi * b / n);
			sum += f(t0 + rho * wa, p0 + rho * wb) * std::pow(wa, -kt) * std::pow(wb, -kp);
		}
	return sum / (double(n) * n * std::pow(rho, kt + kp));
}

Jet random_jet(std::mt19937_64& rng, Chart chart, int order, const SpherePoint& p)
{
	std::uniform_real_distribution<double> u(-1.0, 1.0);
	Jet j(chart, order, p);
	for (auto& c : j.coeffs())
		c = Complex(u(rng), u(rng));
	return j;
}

double max_diff(const Jet& a, const Jet& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("constants and variables")
{
	const SpherePoint p{1.3, 0.7, 2.1};
	const Jet one = Jet::constant(Chart::Spatial, 3, p, 1.0);
	CHECK(one.value() == Complex(1.0));
	CHECK(one.max_abs() == 1.0);

	const Jet th = Jet::variable(Chart::Spatial, 3, p, Coord::Theta);
	CHECK(th.value() == Complex(0.7));
	CHECK(th.coeff({0, 1, 0}) == Complex(1.0));
	CHECK(th.coeff({1, 0, 0}) == Complex(0.0));

	const Jet r_surface = Jet::variable(Chart::Surface, 3, p, Coord::R);
	CHECK(r_surface.value() == Complex(1.3));
	CHECK(r_surface.max_abs() == 1.3);
	CHECK_FALSE(r_surface.is_variable(Coord::R));
	CHECK(r_surface.partial(Coord::R).max_abs() == 0.0);
}

TEST_CASE("layout sizes and graded prefix")
{
	CHECK(JetLayout::size(3, 0) == 1);
	CHECK(JetLayout::size(3, 3) == 20);
	CHECK(JetLayout::size(2, 4) == 15);

	std::mt19937_64 rng(7);
	const SpherePoint p{1.0, 1.0, 1.0};
	const Jet a = random_jet(rng, Chart::Spatial, 5, p);
	const Jet b = random_jet(rng, Chart::Spatial, 5, p);
	// Truncating the product equals the product of truncations.
	CHECK(max_diff((a * b).truncated(2), a.truncated(2) * b.truncated(2)) < 1e-14);
}

TEST_CASE("ring axioms on random jets")
{
	std::mt19937_64 rng(11);
	const SpherePoint p{0.9, 1.1, 0.4};
	for (int trial = 0; trial < 5; ++trial)
	{
		const Jet a = random_jet(rng, Chart::Spatial, 4, p);
		const Jet b = random_jet(rng, Chart::Spatial, 4, p);
		const Jet c = random_jet(rng, Chart::Spatial, 4, p);
		CHECK(max_diff(a * b, b * a) < 1e-13);
		CHECK(max_diff((a * b) * c, a * (b * c)) < 1e-12);
		CHECK(max_diff(a * (b + c), a * b + a * c) < 1e-12);
		CHECK(max_diff(a - a, Jet(Chart::Spatial, 4, p)) == 0.0);
		CHECK(max_diff(a * Jet::constant(Chart::Spatial, 4, p, 1.0), a) == 0.0);
	}
}

TEST_CASE("Leibniz rule for partials")
{
	std::mt19937_64 rng(3);
	const SpherePoint p{1.0, 0.8, 5.0};
	const Jet a = random_jet(rng, Chart::Spatial, 5, p);
	const Jet b = random_jet(rng, Chart::Spatial, 5, p);
	for (Coord v : {Coord::R, Coord::Theta, Coord::Phi})
	{
		const Jet lhs = (a * b).partial(v);
		const Jet rhs = a.partial(v) * b.truncated(4) + a.truncated(4) * b.partial(v);
		CHECK(max_diff(lhs, rhs) < 1e-12);
	}
}

TEST_CASE("partials commute")
{
	std::mt19937_64 rng(5);
	const Jet a = random_jet(rng, Chart::Spatial, 4, SpherePoint{});
	CHECK(max_diff(a.partial(Coord::Theta).partial(Coord::Phi), a.partial(Coord::Phi).partial(Coord::Theta)) == 0.0);
	CHECK(max_diff(a.partial(Coord::R).partial(Coord::Phi), a.partial(Coord::Phi).partial(Coord::R)) == 0.0);
}

TEST_CASE("derivative scales coefficients by multi-index factorial")
{
	const SpherePoint p{1.0, 0.5, 0.0};
	// theta^3 around 0.5: third derivative 6.
	const Jet t = Jet::variable(Chart::Surface, 4, p, Coord::Theta);
	const Jet cube = pow(t, 3);
	CHECK_THAT(cube.derivative({0, 3, 0}).real(), WithinAbs(6.0, 1e-14));
	CHECK_THAT(cube.derivative({0, 2, 0}).real(), WithinAbs(6.0 * 0.5, 1e-14));
	CHECK_THAT(cube.derivative({0, 1, 0}).real(), WithinAbs(3.0 * 0.25, 1e-14));
}

TEST_CASE("elementary functions match a Cauchy-integral oracle")
{
	const SpherePoint p{1.0, 0.9, 1.7};
	const int order = 6;
	const Jet th = Jet::variable(Chart::Surface, order, p, Coord::Theta);
	const Jet ph = Jet::variable(Chart::Surface, order, p, Coord::Phi);

	struct Case
	{
		const char* name;
		Jet jet;
		std::function<Complex(Complex, Complex)> f;
	};
	const Complex i(0.0, 1.0);
	const std::vector<Case> cases{
	    {"sin theta cos phi", sin(th) * cos(ph), [](Complex t, Complex q) { return std::sin(t) * std::cos(q); }},
	    {"exp(i phi) / (2 + cos theta)", exp(i * ph) * reciprocal(2.0 + cos(th)),
	     [i](Complex t, Complex q) { return std::exp(i * q) / (2.0 + std::cos(t)); }},
	    {"tan(theta/2)", tan_half(th), [](Complex t, Complex) { return std::tan(t / 2.0); }},
	    {"cot(theta/2) sin(phi)", cot_half(th) * sin(ph), [](Complex t, Complex q) { return std::sin(q) / std::tan(t / 2.0); }},
	    {"(theta + phi)^4", pow(th + ph, 4), [](Complex t, Complex q) { return std::pow(t + q, 4); }},
	    {"1 / sin theta", reciprocal(sin(th)), [](Complex t, Complex) { return 1.0 / std::sin(t); }},
	};
	for (const auto& c : cases)
	{
		INFO(c.name);
		double sup = 0.0;
		for (int a = 0; a < 48; ++a)
			for (int b = 0; b < 48; ++b)
				sup = std::max(sup, std::abs(c.f(p.theta + 0.25 * std::polar(1.0, kTwoPi * a / 48),
				                                 p.phi + 0.25 * std::polar(1.0, kTwoPi * b / 48))));
		for (int kt = 0; kt <= order; ++kt)
			for (int kp = 0; kp + kt <= order; ++kp)
			{
				const Complex want = cauchy_coefficient(c.f, p.theta, p.phi, kt, kp);
				const Complex got = c.jet.coeff({0, kt, kp});
				CHECK(std::abs(got - want) < 1e-13 * sup * std::pow(4.0, kt + kp));
			}
	}
}

TEST_CASE("division and reciprocal")
{
	std::mt19937_64 rng(13);
	const SpherePoint p{1.0, 1.0, 1.0};
	Jet a = random_jet(rng, Chart::Spatial, 4, p);
	a.coeffs()[0] = Complex(2.0, 0.5);
	const Jet b = random_jet(rng, Chart::Spatial, 4, p);
	CHECK(max_diff(a * reciprocal(a), Jet::constant(Chart::Spatial, 4, p, 1.0)) < 1e-13);
	CHECK(max_diff((b / a) * a, b) < 1e-12);

	Jet zero_value = a;
	zero_value.coeffs()[0] = 0.0;
	CHECK_THROWS_AS(reciprocal(zero_value), SingularValue);

	// At the north pole 1/sin(theta) and cot(theta/2) are singular while
	// tan(theta/2) stays regular.
	const SpherePoint pole{1.0, 0.0, 0.0};
	const Jet t = Jet::variable(Chart::Surface, 3, pole, Coord::Theta);
	CHECK_THROWS_AS(reciprocal(sin(t)), SingularValue);
	CHECK_THROWS_AS(cot_half(t), SingularValue);
	const Jet half = tan_half(t);
	CHECK(half.value() == Complex(0.0));
	CHECK_THAT(half.coeff({0, 1, 0}).real(), WithinAbs(0.5, 1e-15));
}

TEST_CASE("mismatched jets are rejected")
{
	const Jet a = Jet::constant(Chart::Spatial, 3, SpherePoint{1.0, 1.0, 1.0}, 1.0);
	const Jet b = Jet::constant(Chart::Spatial, 2, SpherePoint{1.0, 1.0, 1.0}, 1.0);
	const Jet c = Jet::constant(Chart::Surface, 3, SpherePoint{1.0, 1.0, 1.0}, 1.0);
	const Jet d = Jet::constant(Chart::Spatial, 3, SpherePoint{1.0, 1.2, 1.0}, 1.0);
	CHECK_THROWS_AS(a + b, std::invalid_argument);
	CHECK_THROWS_AS(a * c, std::invalid_argument);
	CHECK_THROWS_AS(a - d, std::invalid_argument);
	CHECK_THROWS_AS(a.truncated(4), std::invalid_argument);
	CHECK_THROWS_AS(Jet::constant(Chart::Spatial, 0, SpherePoint{}, 1.0).partial(Coord::R), std::invalid_argument);
}
