#ifndef MONO_OPERATOR_HPP
#define MONO_OPERATOR_HPP

#include <array>
#include <functional>
#include <map>
#include <string>

#include "mono/sphere.hpp"

namespace mono
{

enum class Slot
{
	Radial,     // coefficient of d/dr
	Polar,      // coefficient of d/dtheta
	Azimuthal,  // coefficient of d/dphi
	Multiplier  // zeroth-order part
};

inline constexpr std::array<Slot, 4> kAllSlots{Slot::Radial, Slot::Polar, Slot::Azimuthal, Slot::Multiplier};

const char* to_string(Slot s);

/// Jets of the four coefficient functions at one point.
struct OperatorCoefficients
{
	Jet radial;
	Jet polar;
	Jet azimuthal;
	Jet multiplier;

	Jet& operator[](Slot s);
	const Jet& operator[](Slot s) const;

	OperatorCoefficients truncated(int order) const;
};

using CoefficientField = std::function<OperatorCoefficients(const JetContext&)>;

/// d(r,theta,phi) d/dr + a d/dtheta + b d/dphi + c. Immutable; the
/// coefficient field is evaluated lazily at whatever order a caller needs.
class FirstOrderOperator
{
public:
	FirstOrderOperator(CoefficientField field, std::string label);

	static FirstOrderOperator zero();
	static FirstOrderOperator partial(Coord which);
	static FirstOrderOperator multiplication(ScalarField f, std::string label = "f");
	static FirstOrderOperator from_fields(ScalarField radial, ScalarField polar, ScalarField azimuthal,
	                                      ScalarField multiplier, std::string label);

	OperatorCoefficients coefficients(const JetContext& ctx) const { return field_(ctx); }
	const std::string& label() const { return label_; }
	FirstOrderOperator relabeled(std::string label) const;

private:
	CoefficientField field_;
	std::string label_;
};

FirstOrderOperator operator+(const FirstOrderOperator& a, const FirstOrderOperator& b);
FirstOrderOperator operator-(const FirstOrderOperator& a, const FirstOrderOperator& b);
FirstOrderOperator operator-(const FirstOrderOperator& a);
FirstOrderOperator operator*(Complex s, const FirstOrderOperator& a);

/// f o O: every coefficient multiplied by f.
FirstOrderOperator left_multiply(const ScalarField& f, const FirstOrderOperator& a);
/// O o f: derivative coefficients times f, plus the derivative of f.
FirstOrderOperator right_multiply(const FirstOrderOperator& a, const ScalarField& f);

/// Derivative part d f_r + a f_theta + b f_phi. The coefficients must have
/// order at least f.order() - 1; the result has order f.order() - 1.
Jet derivative_part(const OperatorCoefficients& o, const Jet& f);

/// (O f) to order f.order() - 1.
Jet apply(const OperatorCoefficients& o, const Jet& f);

/// Jet of O f at ctx.point, valid to order ctx.order - 1.
Jet apply(const FirstOrderOperator& o, const ScalarField& f, const JetContext& ctx);
Jet apply(const FirstOrderOperator& o, const TestFunction& f, const SpherePoint& p, int order,
          Chart chart = Chart::Spatial);

/// Closed-form commutator within the first-order class.
FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b);

/// e^{-i L} O e^{i L}: derivative part unchanged, multiplier gains
/// i (d L_r + a L_theta + b L_phi).
FirstOrderOperator conjugate(const FirstOrderOperator& o, const ScalarField& phase);

struct OperatorIdentityReport
{
	std::string identity_label;
	double max_abs_residual = 0.0;
	std::map<std::string, double> per_coefficient_residuals;
	std::size_t grid_size = 0;
	std::size_t excluded_points = 0;  // singular coefficient at the point
	bool pass = false;
	double tolerance = 0.0;
};

inline constexpr double kDefaultIdentityTolerance = 1e-9;

/// Pointwise comparison of all four coefficients of a - b over the grid.
/// Points where a coefficient is singular are skipped and counted.
OperatorIdentityReport operator_equal(const FirstOrderOperator& a, const FirstOrderOperator& b, const Grid& grid,
                                      double tolerance = kDefaultIdentityTolerance, std::string label = {});

using VectorOperator = std::array<FirstOrderOperator, 3>;
using VectorField = std::array<ScalarField, 3>;

/// (X x Y)_k = (1/2) eps_kij [X_i, Y_j]. This is the literal ordered product
/// eps_kij X_i Y_j whenever that product is first order (in particular for
/// X = Y); see literal_cross_second_order_residual.
VectorOperator cross(const VectorOperator& x, const VectorOperator& y);

/// Largest second-order coefficient of the literal product eps_kij X_i Y_j
/// over the grid. Zero means the literal product equals cross(x, y).
double literal_cross_second_order_residual(const VectorOperator& x, const VectorOperator& y, const Grid& grid);

/// n.O + O.n with operator ordering kept: sum_i 2 n_i O_i + O_i(n_i).
FirstOrderOperator symmetric_dot(const VectorField& n, const VectorOperator& o);

VectorOperator operator+(const VectorOperator& a, const VectorOperator& b);
VectorOperator operator-(const VectorOperator& a, const VectorOperator& b);
VectorOperator operator*(Complex s, const VectorOperator& a);

}  // namespace mono

#endif
