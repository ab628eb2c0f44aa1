#include "mono/monopole.hpp"

#include <cmath>

namespace mono
{

namespace
{

constexpr Complex kI{0.0, 1.0};
constexpr std::array<const char*, 3> kAxis{"x", "y", "z"};
constexpr std::array<std::array<int, 2>, 3> kCyclic{{{1, 2}, {2, 0}, {0, 1}}};

Jet inv_r(const JetContext& c) { return reciprocal(c.var(Coord::R)); }

}  // namespace

PhysicalParams PhysicalParams::with_mu(double mu) const
{
	if (q == 0.0)
		throw std::invalid_argument("with_mu: electric charge is zero, mu is fixed at 0");
	PhysicalParams out = *this;
	out.g = mu * c / q;
	return out;
}

void PhysicalParams::validate() const
{
	if (!(hbar > 0.0))
		throw std::invalid_argument("params: hbar must be positive");
	if (!(c > 0.0))
		throw std::invalid_argument("params: c must be positive");
	if (!(r > 0.0))
		throw std::invalid_argument("params: r must be positive");
	if (!std::isfinite(q) || !std::isfinite(g))
		throw std::invalid_argument("params: charges must be finite");
}

PhysicalParams cooper_pair_profile()
{
	PhysicalParams p;
	p.q = -2.0;
	p.g = -0.25;  // mu = 1/2
	return p;
}

const char* to_string(Gauge g) { return g == Gauge::North ? "north" : "south"; }

VectorOperator cartesian_gradient()
{
	auto component = [](int i) {
		auto er = radial_unit(i), et = polar_unit(i), ep = azimuthal_unit(i);
		return FirstOrderOperator(
		    [=](const JetContext& c) {
			    const Jet ir = inv_r(c);
			    return OperatorCoefficients{er(c), et(c) * ir, ep(c) * ir / sin(c.var(Coord::Theta)), c.zero()};
		    },
		    std::string("grad_cart_") + kAxis[static_cast<std::size_t>(i)]);
	};
	return {component(0), component(1), component(2)};
}

VectorOperator radial_gradient()
{
	auto component = [](int i) {
		auto er = radial_unit(i);
		return FirstOrderOperator(
		    [=](const JetContext& c) {
			    const Jet n = er(c);
			    return OperatorCoefficients{n, c.zero(), c.zero(), n * inv_r(c)};
		    },
		    std::string("grad_par_") + kAxis[static_cast<std::size_t>(i)]);
	};
	return {component(0), component(1), component(2)};
}

VectorOperator radial_gradient_symmetrized()
{
	const VectorField n{radial_unit(0), radial_unit(1), radial_unit(2)};
	const FirstOrderOperator scalar = Complex(0.5) * symmetric_dot(n, cartesian_gradient());
	VectorOperator out{scalar, scalar, scalar};
	for (std::size_t i = 0; i < 3; ++i)
		out[i] = left_multiply(n[i], scalar).relabeled(std::string("grad_par_sym_") + kAxis[i]);
	return out;
}

VectorOperator transverse_gradient()
{
	auto component = [](int i) {
		auto er = radial_unit(i), et = polar_unit(i), ep = azimuthal_unit(i);
		return FirstOrderOperator(
		    [=](const JetContext& c) {
			    const Jet ir = inv_r(c);
			    return OperatorCoefficients{c.zero(), et(c) * ir, ep(c) * ir / sin(c.var(Coord::Theta)), -(er(c) * ir)};
		    },
		    std::string("grad_perp_") + kAxis[static_cast<std::size_t>(i)]);
	};
	return {component(0), component(1), component(2)};
}

VectorOperator geometric_momentum(const PhysicalParams& p)
{
	const double hbar = p.hbar;
	FirstOrderOperator px(
	    [hbar](const JetContext& c) {
		    const Jet th = c.var(Coord::Theta), ph = c.var(Coord::Phi);
		    const Jet pre = Complex(0.0, -hbar) * inv_r(c);
		    return OperatorCoefficients{c.zero(), pre * cos(th) * cos(ph), -(pre * sin(ph) / sin(th)),
		                                -(pre * sin(th) * cos(ph))};
	    },
	    "P_perp_x");
	FirstOrderOperator py(
	    [hbar](const JetContext& c) {
		    const Jet th = c.var(Coord::Theta), ph = c.var(Coord::Phi);
		    const Jet pre = Complex(0.0, -hbar) * inv_r(c);
		    return OperatorCoefficients{c.zero(), pre * cos(th) * sin(ph), pre * cos(ph) / sin(th),
		                                -(pre * sin(th) * sin(ph))};
	    },
	    "P_perp_y");
	FirstOrderOperator pz(
	    [hbar](const JetContext& c) {
		    const Jet th = c.var(Coord::Theta);
		    const Jet pre = Complex(0.0, hbar) * inv_r(c);
		    return OperatorCoefficients{c.zero(), pre * sin(th), c.zero(), pre * cos(th)};
	    },
	    "P_perp_z");
	return {px, py, pz};
}

ScalarField azimuthal_potential(const PhysicalParams& p, const GaugeChoice& gauge)
{
	const double g = p.g;
	const GaugeChoice gc = gauge;
	return [g, gc](const JetContext& c) {
		if (!in_domain(gc.domain(), c.point.theta, gc.overlap_halfwidth))
			throw GaugeDomainError(std::string("vector potential: theta outside the ") + to_string(gc.which) + " patch");
		const Jet th = c.var(Coord::Theta);
		const Jet profile = gc.which == Gauge::North ? tan_half(th) : -cot_half(th);
		return g * profile * inv_r(c);
	};
}

VectorField vector_potential(const PhysicalParams& p, const GaugeChoice& gauge)
{
	const ScalarField aphi = azimuthal_potential(p, gauge);
	return {[aphi](const JetContext& c) { return -(aphi(c) * sin(c.var(Coord::Phi))); },
	        [aphi](const JetContext& c) { return aphi(c) * cos(c.var(Coord::Phi)); },
	        [aphi](const JetContext& c) {
		        aphi(c);  // domain check only
		        return c.zero();
	        }};
}

VectorOperator geometric_momentum_gauged(const PhysicalParams& p, const GaugeChoice& gauge)
{
	const VectorOperator pi = geometric_momentum(p);
	const VectorField a = vector_potential(p, gauge);
	const double coupling = p.q / p.c;
	VectorOperator out = pi;
	for (std::size_t i = 0; i < 3; ++i)
	{
		const ScalarField ai = a[i];
		out[i] = (pi[i] - FirstOrderOperator::multiplication([ai, coupling](const JetContext& c) { return coupling * ai(c); }))
		             .relabeled(std::string("Pi_") + kAxis[i]);
	}
	return out;
}

VectorOperator angular_momentum(const PhysicalParams& p)
{
	const VectorOperator grad = cartesian_gradient();
	const Complex minus_i_hbar(0.0, -p.hbar);
	VectorOperator out = grad;
	for (std::size_t k = 0; k < 3; ++k)
	{
		const auto [i, j] = kCyclic[k];
		out[k] = (minus_i_hbar * (left_multiply(cartesian_coordinate(i), grad[static_cast<std::size_t>(j)]) -
		                          left_multiply(cartesian_coordinate(j), grad[static_cast<std::size_t>(i)])))
		             .relabeled(std::string("L0_") + kAxis[k]);
	}
	return out;
}

VectorOperator angular_momentum_gauged(const PhysicalParams& p, const GaugeChoice& gauge)
{
	const VectorOperator pi = geometric_momentum_gauged(p, gauge);
	const double mu = p.mu();
	VectorOperator out = pi;
	for (std::size_t k = 0; k < 3; ++k)
	{
		const auto [i, j] = kCyclic[k];
		const ScalarField er = radial_unit(static_cast<int>(k));
		const auto extra = FirstOrderOperator::multiplication([er, mu](const JetContext& c) { return mu * er(c); });
		out[k] = (left_multiply(cartesian_coordinate(i), pi[static_cast<std::size_t>(j)]) -
		          left_multiply(cartesian_coordinate(j), pi[static_cast<std::size_t>(i)]) - extra)
		             .relabeled(std::string("L_") + kAxis[k]);
	}
	return out;
}

FirstOrderOperator lz_closed_form(const PhysicalParams& p, Gauge which)
{
	const double shift = which == Gauge::North ? -p.mu() : p.mu();
	const double hbar = p.hbar;
	return {[hbar, shift](const JetContext& c) {
		        return OperatorCoefficients{c.zero(), c.zero(), c.constant(Complex(0.0, -hbar)), c.constant(shift)};
	        },
	        std::string("Lz_closed_") + to_string(which)};
}

ScalarField radial_field_strength(const PhysicalParams& p, const GaugeChoice& gauge)
{
	const VectorField a = vector_potential(p, gauge);
	const VectorOperator grad = cartesian_gradient();
	return [a, grad](const JetContext& c) {
		JetContext up = c;
		up.order = c.order + 1;
		Jet out = c.zero();
		for (std::size_t k = 0; k < 3; ++k)
		{
			const auto [i, j] = kCyclic[k];
			const Jet curl_k = apply(grad[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)], up) -
			                   apply(grad[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(i)], up);
			out += radial_unit(static_cast<int>(k))(c) * curl_k;
		}
		return out;
	};
}

ScalarField monopole_field(const PhysicalParams& p)
{
	const double g = p.g;
	return [g](const JetContext& c) { return g * pow(inv_r(c), 2); };
}

GaugeFunction gauge_function(const PhysicalParams& p, double tolerance, double overlap_halfwidth)
{
	if (p.q == 0.0)
		throw std::invalid_argument("gauge_function: electric charge is zero");
	const double slope = 2.0 * p.mu() / p.hbar;
	GaugeFunction out;
	out.phase = [slope](const JetContext& c) { return slope * c.var(Coord::Phi); };

	GridSpec spec;
	spec.n_theta = 5;
	spec.n_phi = 6;
	spec.theta_margin = kPi / 2 - overlap_halfwidth + 1e-9;
	spec.domain = GaugeDomain::Overlap;
	spec.radius = p.r;
	spec.overlap_halfwidth = overlap_halfwidth;
	const Grid grid = make_grid(spec);

	const VectorField north = vector_potential(p, {Gauge::North, overlap_halfwidth});
	const VectorField south = vector_potential(p, {Gauge::South, overlap_halfwidth});
	const VectorOperator grad = cartesian_gradient();
	const double scale = p.hbar * p.c / p.q;
	out.defining_residual = 0.0;
	out.sample_points = grid.points.size();
	for (const auto& pt : grid.points)
	{
		const JetContext c{pt, 0, Chart::Spatial};
		const JetContext up{pt, 1, Chart::Spatial};
		for (std::size_t i = 0; i < 3; ++i)
		{
			const Complex lhs = north[i](c).value() - south[i](c).value();
			const Complex rhs = scale * apply(grad[i], out.phase, up).value();
			out.defining_residual = std::max(out.defining_residual, std::abs(lhs - rhs));
		}
	}
	if (!(out.defining_residual <= tolerance))
		throw std::runtime_error("gauge_function: A_north - A_south is not (hbar c/q) grad of the phase; residual " +
		                         std::to_string(out.defining_residual));
	return out;
}

OperatorSet::OperatorSet(const PhysicalParams& p, const GaugeChoice& gauge, std::optional<Perturbation> perturbation)
    : params_(p), gauge_(gauge)
{
	p.validate();
	put("grad_cart", cartesian_gradient());
	put("grad_par", radial_gradient());
	put("grad_par_sym", radial_gradient_symmetrized());
	put("grad_perp", transverse_gradient());
	put("P_perp", geometric_momentum(p));
	put("Pi", geometric_momentum_gauged(p, gauge));
	put("L", angular_momentum_gauged(p, gauge));
	put("L0", angular_momentum(p));
	ops_.insert_or_assign("Lz_closed", lz_closed_form(p, gauge.which));

	if (perturbation)
	{
		auto it = ops_.find(perturbation->target);
		if (it == ops_.end())
			throw std::invalid_argument("perturbation: unknown operator '" + perturbation->target + "'");
		const FirstOrderOperator base = it->second;
		const Slot slot = perturbation->slot;
		const double delta = perturbation->delta;
		it->second = FirstOrderOperator(
		    [base, slot, delta](const JetContext& c) {
			    auto x = base.coefficients(c);
			    x[slot] += delta;
			    return x;
		    },
		    base.label() + "~");
	}
}

void OperatorSet::put(const std::string& stem, const VectorOperator& v)
{
	for (std::size_t i = 0; i < 3; ++i)
		ops_.insert_or_assign(stem + "_" + kAxis[i], v[i]);
}

const FirstOrderOperator& OperatorSet::get(const std::string& name) const
{
	auto it = ops_.find(name);
	if (it == ops_.end())
		throw std::invalid_argument("OperatorSet: unknown operator '" + name + "'");
	return it->second;
}

VectorOperator OperatorSet::vec(const std::string& stem) const
{
	return {get(stem + "_x"), get(stem + "_y"), get(stem + "_z")};
}

std::vector<std::string> OperatorSet::names()
{
	std::vector<std::string> out;
	for (const char* stem : {"grad_cart", "grad_par", "grad_par_sym", "grad_perp", "P_perp", "Pi", "L", "L0"})
		for (const char* ax : kAxis)
			out.push_back(std::string(stem) + "_" + ax);
	out.push_back("Lz_closed");
	return out;
}

}  // namespace mono
