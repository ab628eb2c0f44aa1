#ifndef MONO_MONOPOLE_HPP
#define MONO_MONOPOLE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mono/operator.hpp"

namespace mono
{

/// Physical constants of the charge-monopole pair. Gaussian units, so the
/// vector potential enters through q/c.
struct PhysicalParams
{
	double hbar = 1.0;
	double c = 1.0;
	double q = -1.0;  // electric charge
	double g = 0.5;   // magnetic charge
	double r = 1.0;   // sphere radius

	/// Monopole coupling q g / c. Derived, never stored.
	double mu() const { return q * g / c; }

	/// Same constants with g chosen so that mu() == mu. Requires q != 0.
	PhysicalParams with_mu(double mu) const;

	void validate() const;
};

/// Cooper-pair charge q = -2 (unit elementary charge), otherwise defaults.
PhysicalParams cooper_pair_profile();

enum class Gauge
{
	North,
	South
};

const char* to_string(Gauge g);

struct GaugeChoice
{
	Gauge which = Gauge::North;
	double overlap_halfwidth = kDefaultOverlapHalfwidth;

	GaugeDomain domain() const { return which == Gauge::North ? GaugeDomain::North : GaugeDomain::South; }
};

/// Evaluation outside the patch on which a gauge potential is defined.
class GaugeDomainError : public std::domain_error
{
public:
	using std::domain_error::domain_error;
};

/// Cartesian gradient in spherical coordinates:
/// e_r d/dr + e_theta (1/r) d/dtheta + e_phi (1/(r sin theta)) d/dphi.
VectorOperator cartesian_gradient();

/// Radial part e_r (d/dr + 1/r).
VectorOperator radial_gradient();

/// Radial part assembled from its symmetrized definition
/// e_r * (1/2)(e_r . grad + grad . e_r).
VectorOperator radial_gradient_symmetrized();

/// Transverse part e_theta (1/r) d/dtheta + e_phi (1/(r sin theta)) d/dphi - e_r / r.
VectorOperator transverse_gradient();

/// Geometric momentum components written out in Cartesian projections,
/// no magnetic field. No radial derivative.
VectorOperator geometric_momentum(const PhysicalParams& p);

/// A_phi of the chosen patch: (g/r) tan(theta/2) north, -(g/r) cot(theta/2) south.
ScalarField azimuthal_potential(const PhysicalParams& p, const GaugeChoice& gauge);

/// Cartesian components (-A_phi sin phi, A_phi cos phi, 0).
VectorField vector_potential(const PhysicalParams& p, const GaugeChoice& gauge);

/// Pi_i(A) = Pi_i - (q/c) A_i.
VectorOperator geometric_momentum_gauged(const PhysicalParams& p, const GaugeChoice& gauge);

/// L = r x (-i hbar grad) with the Cartesian gradient; the A = 0 reference.
VectorOperator angular_momentum(const PhysicalParams& p);

/// L_i(A) = eps_ijk x_j Pi_k(A) - mu (e_r)_i, coordinates multiplying from
/// the left.
VectorOperator angular_momentum_gauged(const PhysicalParams& p, const GaugeChoice& gauge);

/// -i hbar d/dphi - mu (north) or + mu (south).
FirstOrderOperator lz_closed_form(const PhysicalParams& p, Gauge which);

/// (curl A) . e_r, formed by differentiating A with cartesian_gradient().
ScalarField radial_field_strength(const PhysicalParams& p, const GaugeChoice& gauge);

/// g / r^2.
ScalarField monopole_field(const PhysicalParams& p);

struct GaugeFunction
{
	ScalarField phase;          // 2 mu phi / hbar
	double defining_residual;   // max |A_N - A_S - (hbar c / q) grad phase|
	std::size_t sample_points;
};

/// The phase relating the two patches, checked on an overlap grid.
/// Throws std::runtime_error when the defining residual exceeds tolerance.
GaugeFunction gauge_function(const PhysicalParams& p, double tolerance = 1e-10, double overlap_halfwidth = kDefaultOverlapHalfwidth);

/// Constant added to one coefficient slot of one named operator; used to
/// confirm that verification suites are not vacuous.
struct Perturbation
{
	std::string target;
	Slot slot = Slot::Multiplier;
	double delta = 1e-3;
};

/// Every named operator for one parameter set and gauge.
///   grad_cart_*, grad_par_*, grad_par_sym_*, grad_perp_*  gradient pieces
///   P_perp_*                                              geometric momentum, A = 0
///   Pi_*, L_*                                             gauged momentum and angular momentum
///   L0_*                                                  r x (-i hbar grad)
///   Lz_closed                                             -i hbar d/dphi -+ mu
/// with * in {x, y, z}.
class OperatorSet
{
public:
	OperatorSet(const PhysicalParams& p, const GaugeChoice& gauge, std::optional<Perturbation> perturbation = {});

	const FirstOrderOperator& get(const std::string& name) const;
	VectorOperator vec(const std::string& stem) const;

	const PhysicalParams& params() const { return params_; }
	const GaugeChoice& gauge() const { return gauge_; }

	static std::vector<std::string> names();

private:
	void put(const std::string& stem, const VectorOperator& v);

	PhysicalParams params_;
	GaugeChoice gauge_;
	std::map<std::string, FirstOrderOperator> ops_;
};

}  // namespace mono

#endif
