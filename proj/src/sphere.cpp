#include "mono/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mono
{

ScalarField constant_field(Complex v)
{
	return [v](const JetContext& ctx) { return ctx.constant(v); };
}

Frame Frame::at(const SpherePoint& p)
{
	const double st = std::sin(p.theta), ct = std::cos(p.theta);
	const double sp = std::sin(p.phi), cp = std::cos(p.phi);
	return {{st * cp, st * sp, ct}, {ct * cp, ct * sp, -st}, {-sp, cp, 0.0}};
}

ScalarField radial_unit(int i)
{
	switch (i)
	{
	case 0: return [](const JetContext& c) { return sin(c.var(Coord::Theta)) * cos(c.var(Coord::Phi)); };
	case 1: return [](const JetContext& c) { return sin(c.var(Coord::Theta)) * sin(c.var(Coord::Phi)); };
	case 2: return [](const JetContext& c) { return cos(c.var(Coord::Theta)); };
	}
	throw std::out_of_range("radial_unit: component index");
}

ScalarField polar_unit(int i)
{
	switch (i)
	{
	case 0: return [](const JetContext& c) { return cos(c.var(Coord::Theta)) * cos(c.var(Coord::Phi)); };
	case 1: return [](const JetContext& c) { return cos(c.var(Coord::Theta)) * sin(c.var(Coord::Phi)); };
	case 2: return [](const JetContext& c) { return -sin(c.var(Coord::Theta)); };
	}
	throw std::out_of_range("polar_unit: component index");
}

ScalarField azimuthal_unit(int i)
{
	switch (i)
	{
	case 0: return [](const JetContext& c) { return -sin(c.var(Coord::Phi)); };
	case 1: return [](const JetContext& c) { return cos(c.var(Coord::Phi)); };
	case 2: return [](const JetContext& c) { return c.zero(); };
	}
	throw std::out_of_range("azimuthal_unit: component index");
}

ScalarField cartesian_coordinate(int i)
{
	auto unit = radial_unit(i);
	return [unit](const JetContext& c) { return c.var(Coord::R) * unit(c); };
}

const char* to_string(GaugeDomain d)
{
	switch (d)
	{
	case GaugeDomain::North: return "north";
	case GaugeDomain::South: return "south";
	case GaugeDomain::Overlap: return "overlap";
	case GaugeDomain::Full: return "full";
	}
	return "?";
}

bool in_domain(GaugeDomain d, double theta, double a)
{
	switch (d)
	{
	case GaugeDomain::North: return theta >= 0.0 && theta <= kPi / 2 + a;
	case GaugeDomain::South: return theta >= kPi / 2 - a && theta <= kPi;
	case GaugeDomain::Overlap: return theta >= kPi / 2 - a && theta <= kPi / 2 + a;
	case GaugeDomain::Full: return theta >= 0.0 && theta <= kPi;
	}
	return false;
}

Grid make_grid(const GridSpec& spec)
{
	if (spec.n_theta < 2 || spec.n_phi < 2)
		throw std::invalid_argument("make_grid: need at least 2 points per direction");
	if (!(spec.theta_margin > 0.0 && spec.theta_margin < kPi / 2))
		throw std::invalid_argument("make_grid: theta margin must lie in (0, pi/2)");
	if (!(spec.overlap_halfwidth > 0.0 && spec.overlap_halfwidth < kPi / 2))
		throw std::invalid_argument("make_grid: overlap half-width must lie in (0, pi/2)");
	if (!(spec.radius > 0.0))
		throw std::invalid_argument("make_grid: radius must be positive");

	const double lo = spec.theta_margin, hi = kPi - spec.theta_margin;
	const double dtheta = (hi - lo) / (spec.n_theta - 1);
	const double dphi = 2 * kPi / spec.n_phi;

	std::optional<std::mt19937_64> rng;
	if (spec.jitter_seed)
		rng.emplace(*spec.jitter_seed);
	std::uniform_real_distribution<double> unit(-0.25, 0.25);

	Grid grid;
	grid.theta_margin = spec.theta_margin;
	grid.domain = spec.domain;
	grid.overlap_halfwidth = spec.overlap_halfwidth;
	for (int i = 0; i < spec.n_theta; ++i)
		for (int j = 0; j < spec.n_phi; ++j)
		{
			double theta = lo + i * dtheta;
			double phi = j * dphi;
			if (rng)
			{
				// Draw both offsets unconditionally so the stream does not
				// depend on which points survive the domain filter.
				const double jt = unit(*rng) * dtheta, jp = unit(*rng) * dphi;
				const double moved = std::clamp(theta + jt, lo, hi);
				if (in_domain(spec.domain, moved, spec.overlap_halfwidth))
					theta = moved;
				phi = std::fmod(phi + jp + 2 * kPi, 2 * kPi);
			}
			if (in_domain(spec.domain, theta, spec.overlap_halfwidth))
				grid.points.push_back({spec.radius, theta, phi});
		}
	if (grid.points.empty())
		throw std::invalid_argument("make_grid: gauge domain does not intersect the grid");
	return grid;
}

Grid make_grid(int n_theta, int n_phi, double theta_margin, GaugeDomain domain)
{
	GridSpec spec;
	spec.n_theta = n_theta;
	spec.n_phi = n_phi;
	spec.theta_margin = theta_margin;
	spec.domain = domain;
	return make_grid(spec);
}

namespace
{

TestFunction azimuthal_harmonic(int m)
{
	TestFunction f;
	f.id = "exp(" + std::to_string(m) + "i phi) sin^" + std::to_string(std::abs(m)) + " theta";
	f.band_limit = std::abs(m);
	f.evaluate = [m](const JetContext& c) {
		return exp(Complex(0.0, m) * c.var(Coord::Phi)) * pow(sin(c.var(Coord::Theta)), std::abs(m));
	};
	return f;
}

}  // namespace

std::vector<TestFunction> test_function_catalog(std::uint64_t seed)
{
	std::vector<TestFunction> out;
	out.push_back({"one", constant_field(1.0), 0});
	for (int m : {-2, -1, 1, 2})
		out.push_back(azimuthal_harmonic(m));
	out.push_back({"cos theta exp(i phi)",
	               [](const JetContext& c) { return cos(c.var(Coord::Theta)) * exp(Complex(0.0, 1.0) * c.var(Coord::Phi)); },
	               2});

	// sum_{j<=2, |m|<=2} c_jm cos(j theta) e^{i m phi}, seeded coefficients
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> dist(-1.0, 1.0);
	std::vector<std::pair<std::array<int, 2>, Complex>> terms;
	for (int j = 0; j <= 2; ++j)
		for (int m = -2; m <= 2; ++m)
		{
			const double re = dist(rng);
			const double im = dist(rng);
			terms.push_back({{j, m}, Complex(re, im)});
		}
	out.push_back({"random trig polynomial",
	               [terms](const JetContext& c) {
		               Jet sum = c.zero();
		               const Jet theta = c.var(Coord::Theta), phi = c.var(Coord::Phi);
		               for (const auto& [jm, coef] : terms)
			               sum += coef * cos(static_cast<double>(jm[0]) * theta) * exp(Complex(0.0, jm[1]) * phi);
		               return sum;
	               },
	               2});
	return out;
}

}  // namespace mono
