#ifndef MONO_SPHERE_HPP
#define MONO_SPHERE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mono/jet.hpp"

namespace mono
{

inline constexpr double kPi = 3.14159265358979323846;

/// Where and to what order a field is being expanded.
struct JetContext
{
	SpherePoint point;
	int order = 3;
	Chart chart = Chart::Spatial;

	Jet var(Coord which) const { return Jet::variable(chart, order, point, which); }
	Jet constant(Complex v) const { return Jet::constant(chart, order, point, v); }
	Jet zero() const { return Jet(chart, order, point); }
};

/// A complex function of (r, theta, phi) presented through its jets.
/// Implementations must be reentrant.
using ScalarField = std::function<Jet(const JetContext&)>;

ScalarField constant_field(Complex v);

/// Orthonormal moving frame in Cartesian components.
struct Frame
{
	Vec3 e_r;
	Vec3 e_theta;
	Vec3 e_phi;

	static Frame at(const SpherePoint& p);
};

/// Cartesian component i of e_r, e_theta, e_phi as fields on the sphere.
ScalarField radial_unit(int i);
ScalarField polar_unit(int i);
ScalarField azimuthal_unit(int i);
/// x, y or z as a function of (r, theta, phi).
ScalarField cartesian_coordinate(int i);

enum class GaugeDomain
{
	North,
	South,
	Overlap,
	Full
};

const char* to_string(GaugeDomain d);

inline constexpr double kDefaultOverlapHalfwidth = kPi / 4;
inline constexpr double kDefaultThetaMargin = 0.15;

/// North patch covers theta <= pi/2 + a, south theta >= pi/2 - a.
bool in_domain(GaugeDomain d, double theta, double overlap_halfwidth = kDefaultOverlapHalfwidth);

struct Grid
{
	std::vector<SpherePoint> points;
	double theta_margin = kDefaultThetaMargin;
	GaugeDomain domain = GaugeDomain::Full;
	double overlap_halfwidth = kDefaultOverlapHalfwidth;
};

struct GridSpec
{
	int n_theta = 20;
	int n_phi = 40;
	double theta_margin = kDefaultThetaMargin;
	GaugeDomain domain = GaugeDomain::Full;
	double radius = 1.0;
	double overlap_halfwidth = kDefaultOverlapHalfwidth;
	/// When set, every point is displaced by up to a quarter grid spacing,
	/// deterministically from the seed, and kept inside margin and domain.
	std::optional<std::uint64_t> jitter_seed;
};

/// Tensor grid: n_theta values uniform on [margin, pi - margin] times n_phi
/// values uniform on [0, 2 pi), filtered to the gauge domain.
Grid make_grid(const GridSpec& spec);
Grid make_grid(int n_theta, int n_phi, double theta_margin, GaugeDomain domain);

struct TestFunction
{
	std::string id;
	ScalarField evaluate;
	int band_limit = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20190611;

/// Smooth, 2 pi-periodic states used to probe operators: the constant,
/// e^{i m phi} sin^|m| theta for m = -2, -1, 1, 2, cos(theta) e^{i phi}, and a
/// seeded random trigonometric polynomial.
std::vector<TestFunction> test_function_catalog(std::uint64_t seed = kDefaultSeed);

}  // namespace mono

#endif
