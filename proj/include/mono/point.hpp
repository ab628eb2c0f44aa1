#ifndef MONO_POINT_HPP
#define MONO_POINT_HPP

#include <array>
#include <complex>

namespace mono
{

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Spherical polar coordinates. theta is the polar angle from +z, phi the
/// azimuth from +x.
struct SpherePoint
{
	double r = 1.0;
	double theta = 0.5 * 3.14159265358979323846;
	double phi = 0.0;

	Vec3 cartesian() const;

	friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

/// Coordinate functions a jet can be taken with respect to.
enum class Coord
{
	R,
	Theta,
	Phi
};

/// Which coordinates are live jet variables. Surface jets freeze r, which
/// is how operators that act at fixed radius are evaluated.
enum class Chart
{
	Spatial,  // (r, theta, phi)
	Surface   // (theta, phi)
};

const char* to_string(Coord c);

}  // namespace mono

#endif
