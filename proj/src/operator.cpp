#include "mono/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace mono
{

const char* to_string(Slot s)
{
	switch (s)
	{
	case Slot::Radial: return "radial";
	case Slot::Polar: return "polar";
	case Slot::Azimuthal: return "azimuthal";
	case Slot::Multiplier: return "multiplier";
	}
	return "?";
}

Jet& OperatorCoefficients::operator[](Slot s)
{
	switch (s)
	{
	case Slot::Radial: return radial;
	case Slot::Polar: return polar;
	case Slot::Azimuthal: return azimuthal;
	case Slot::Multiplier: break;
	}
	return multiplier;
}

const Jet& OperatorCoefficients::operator[](Slot s) const { return const_cast<OperatorCoefficients&>(*this)[s]; }

OperatorCoefficients OperatorCoefficients::truncated(int order) const
{
	return {radial.truncated(order), polar.truncated(order), azimuthal.truncated(order), multiplier.truncated(order)};
}

FirstOrderOperator::FirstOrderOperator(CoefficientField field, std::string label)
    : field_(std::move(field)), label_(std::move(label))
{
}

FirstOrderOperator FirstOrderOperator::zero()
{
	return {[](const JetContext& c) { return OperatorCoefficients{c.zero(), c.zero(), c.zero(), c.zero()}; }, "0"};
}

FirstOrderOperator FirstOrderOperator::partial(Coord which)
{
	return {[which](const JetContext& c) {
		        OperatorCoefficients o{c.zero(), c.zero(), c.zero(), c.zero()};
		        const Slot s = which == Coord::R ? Slot::Radial : which == Coord::Theta ? Slot::Polar : Slot::Azimuthal;
		        o[s] = c.constant(1.0);
		        return o;
	        },
	        std::string("d/d") + to_string(which)};
}

FirstOrderOperator FirstOrderOperator::multiplication(ScalarField f, std::string label)
{
	return {[f = std::move(f)](const JetContext& c) { return OperatorCoefficients{c.zero(), c.zero(), c.zero(), f(c)}; },
	        std::move(label)};
}

FirstOrderOperator FirstOrderOperator::from_fields(ScalarField radial, ScalarField polar, ScalarField azimuthal,
                                                   ScalarField multiplier, std::string label)
{
	return {[=](const JetContext& c) {
		        auto eval = [&c](const ScalarField& f) { return f ? f(c) : c.zero(); };
		        return OperatorCoefficients{eval(radial), eval(polar), eval(azimuthal), eval(multiplier)};
	        },
	        std::move(label)};
}

FirstOrderOperator FirstOrderOperator::relabeled(std::string label) const { return {field_, std::move(label)}; }

FirstOrderOperator operator+(const FirstOrderOperator& a, const FirstOrderOperator& b)
{
	return {[a, b](const JetContext& c) {
		        auto x = a.coefficients(c);
		        const auto y = b.coefficients(c);
		        for (Slot s : kAllSlots)
			        x[s] += y[s];
		        return x;
	        },
	        "(" + a.label() + " + " + b.label() + ")"};
}

FirstOrderOperator operator-(const FirstOrderOperator& a, const FirstOrderOperator& b)
{
	return {[a, b](const JetContext& c) {
		        auto x = a.coefficients(c);
		        const auto y = b.coefficients(c);
		        for (Slot s : kAllSlots)
			        x[s] -= y[s];
		        return x;
	        },
	        "(" + a.label() + " - " + b.label() + ")"};
}

FirstOrderOperator operator-(const FirstOrderOperator& a) { return Complex(-1.0) * a; }

FirstOrderOperator operator*(Complex s, const FirstOrderOperator& a)
{
	return {[s, a](const JetContext& c) {
		        auto x = a.coefficients(c);
		        for (Slot sl : kAllSlots)
			        x[sl] *= s;
		        return x;
	        },
	        a.label()};
}

FirstOrderOperator left_multiply(const ScalarField& f, const FirstOrderOperator& a)
{
	return {[f, a](const JetContext& c) {
		        auto x = a.coefficients(c);
		        const Jet h = f(c);
		        for (Slot s : kAllSlots)
			        x[s] = h * x[s];
		        return x;
	        },
	        "f " + a.label()};
}

FirstOrderOperator right_multiply(const FirstOrderOperator& a, const ScalarField& f)
{
	return {[f, a](const JetContext& c) {
		        JetContext up = c;
		        up.order = c.order + 1;
		        const auto x = a.coefficients(up);
		        const Jet h = f(up);
		        OperatorCoefficients out = x.truncated(c.order);
		        const Jet hk = h.truncated(c.order);
		        out.radial = out.radial * hk;
		        out.polar = out.polar * hk;
		        out.azimuthal = out.azimuthal * hk;
		        out.multiplier = out.multiplier * hk + derivative_part(x, h);
		        return out;
	        },
	        a.label() + " f"};
}

Jet derivative_part(const OperatorCoefficients& o, const Jet& f)
{
	const int k = f.order() - 1;
	if (k < 0)
		throw std::invalid_argument("derivative_part: function jet must have order >= 1");
	if (o.multiplier.order() < k)
		throw std::invalid_argument("derivative_part: coefficient jets too low in order");
	if (f.chart() == Chart::Surface && o.radial.truncated(0).max_abs() != 0.0)
		throw std::domain_error("derivative_part: radial derivative requested on a fixed-radius chart");

	Jet out = o.polar.truncated(k) * f.partial(Coord::Theta);
	out += o.azimuthal.truncated(k) * f.partial(Coord::Phi);
	if (f.chart() == Chart::Spatial)
		out += o.radial.truncated(k) * f.partial(Coord::R);
	return out;
}

Jet apply(const OperatorCoefficients& o, const Jet& f)
{
	const int k = f.order() - 1;
	Jet out = derivative_part(o, f);
	out += o.multiplier.truncated(k) * f.truncated(k);
	return out;
}

Jet apply(const FirstOrderOperator& o, const ScalarField& f, const JetContext& ctx)
{
	if (ctx.order < 1)
		throw std::invalid_argument("apply: jet order must be at least 1");
	JetContext low = ctx;
	low.order = ctx.order - 1;
	return apply(o.coefficients(low), f(ctx));
}

Jet apply(const FirstOrderOperator& o, const TestFunction& f, const SpherePoint& p, int order, Chart chart)
{
	return apply(o, f.evaluate, JetContext{p, order, chart});
}

FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b)
{
	return {[a, b](const JetContext& c) {
		        JetContext up = c;
		        up.order = c.order + 1;
		        const auto x = a.coefficients(up);
		        const auto y = b.coefficients(up);
		        OperatorCoefficients out{c.zero(), c.zero(), c.zero(), c.zero()};
		        for (Slot s : kAllSlots)
			        out[s] = derivative_part(x, y[s]) - derivative_part(y, x[s]);
		        return out;
	        },
	        "[" + a.label() + ", " + b.label() + "]"};
}

FirstOrderOperator conjugate(const FirstOrderOperator& o, const ScalarField& phase)
{
	return {[o, phase](const JetContext& c) {
		        JetContext up = c;
		        up.order = c.order + 1;
		        auto x = o.coefficients(c);
		        x.multiplier += Complex(0.0, 1.0) * derivative_part(x, phase(up));
		        return x;
	        },
	        "conj(" + o.label() + ")"};
}

OperatorIdentityReport operator_equal(const FirstOrderOperator& a, const FirstOrderOperator& b, const Grid& grid,
                                      double tolerance, std::string label)
{
	if (grid.points.empty())
		throw std::invalid_argument("operator_equal: empty grid");
	OperatorIdentityReport rep;
	rep.identity_label = label.empty() ? a.label() + " == " + b.label() : std::move(label);
	rep.tolerance = tolerance;
	rep.grid_size = grid.points.size();
	for (Slot s : kAllSlots)
		rep.per_coefficient_residuals[to_string(s)] = 0.0;

	bool any_nan = false;
	for (const auto& p : grid.points)
	{
		const JetContext ctx{p, 0, Chart::Spatial};
		std::optional<OperatorCoefficients> diff;
		try
		{
			diff = a.coefficients(ctx);
			const auto y = b.coefficients(ctx);
			for (Slot s : kAllSlots)
				(*diff)[s] -= y[s];
		}
		catch (const std::domain_error&)
		{
			++rep.excluded_points;
			continue;
		}
		for (Slot s : kAllSlots)
		{
			const double d = std::abs((*diff)[s].value());
			if (std::isnan(d))
				any_nan = true;
			auto& slot = rep.per_coefficient_residuals[to_string(s)];
			slot = std::max(slot, d);
			rep.max_abs_residual = std::max(rep.max_abs_residual, d);
		}
	}
	if (any_nan)
		rep.max_abs_residual = std::numeric_limits<double>::quiet_NaN();
	rep.pass = !any_nan && rep.excluded_points < rep.grid_size && rep.max_abs_residual <= tolerance;
	return rep;
}

namespace
{

constexpr std::array<std::array<int, 2>, 3> kCyclic{{{1, 2}, {2, 0}, {0, 1}}};

}  // namespace

VectorOperator cross(const VectorOperator& x, const VectorOperator& y)
{
	auto component = [&](int k) {
		const auto [i, j] = kCyclic[static_cast<std::size_t>(k)];
		const auto& xi = x[static_cast<std::size_t>(i)];
		const auto& xj = x[static_cast<std::size_t>(j)];
		const auto& yi = y[static_cast<std::size_t>(i)];
		const auto& yj = y[static_cast<std::size_t>(j)];
		return Complex(0.5) * (commutator(xi, yj) - commutator(xj, yi));
	};
	return {component(0), component(1), component(2)};
}

double literal_cross_second_order_residual(const VectorOperator& x, const VectorOperator& y, const Grid& grid)
{
	double worst = 0.0;
	for (const auto& p : grid.points)
	{
		const JetContext ctx{p, 0, Chart::Spatial};
		std::array<std::array<Complex, 3>, 3> sx, sy;  // principal symbols
		for (std::size_t i = 0; i < 3; ++i)
		{
			const auto cx = x[i].coefficients(ctx);
			const auto cy = y[i].coefficients(ctx);
			sx[i] = {cx.radial.value(), cx.polar.value(), cx.azimuthal.value()};
			sy[i] = {cy.radial.value(), cy.polar.value(), cy.azimuthal.value()};
		}
		for (const auto& [i, j] : kCyclic)
			for (std::size_t u = 0; u < 3; ++u)
				for (std::size_t v = u; v < 3; ++v)
				{
					auto m = [&](std::size_t a, std::size_t b) {
						return sx[static_cast<std::size_t>(i)][a] * sy[static_cast<std::size_t>(j)][b] -
						       sx[static_cast<std::size_t>(j)][a] * sy[static_cast<std::size_t>(i)][b];
					};
					worst = std::max(worst, std::abs(0.5 * (m(u, v) + m(v, u))));
				}
	}
	return worst;
}

FirstOrderOperator symmetric_dot(const VectorField& n, const VectorOperator& o)
{
	FirstOrderOperator sum = left_multiply(n[0], o[0]) + right_multiply(o[0], n[0]);
	for (std::size_t i = 1; i < 3; ++i)
		sum = sum + left_multiply(n[i], o[i]) + right_multiply(o[i], n[i]);
	return sum.relabeled("n.O + O.n");
}

VectorOperator operator+(const VectorOperator& a, const VectorOperator& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

VectorOperator operator-(const VectorOperator& a, const VectorOperator& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

VectorOperator operator*(Complex s, const VectorOperator& a) { return {s * a[0], s * a[1], s * a[2]}; }

}  // namespace mono
