#include "mono/algebra_checks.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "mono/quantization.hpp"

namespace mono
{

namespace
{

constexpr std::array<const char*, 3> kAxis{"x", "y", "z"};
constexpr std::array<std::array<int, 2>, 3> kCyclic{{{1, 2}, {2, 0}, {0, 1}}};
const Complex kI{0.0, 1.0};

int levi_civita(int i, int j, int k)
{
	return (i - j) * (j - k) * (k - i) / 2;
}

FirstOrderOperator times_r(const FirstOrderOperator& o)
{
	return left_multiply([](const JetContext& c) { return c.var(Coord::R); }, o);
}

VectorOperator times_r(const VectorOperator& v) { return {times_r(v[0]), times_r(v[1]), times_r(v[2])}; }

/// Scalar check wrapped as an identity report.
OperatorIdentityReport scalar_report(std::string label, double residual, double tolerance, std::size_t samples = 1)
{
	OperatorIdentityReport r;
	r.identity_label = std::move(label);
	r.max_abs_residual = residual;
	r.tolerance = tolerance;
	r.grid_size = samples;
	r.pass = residual <= tolerance;
	return r;
}

std::vector<SweepPoint> single_point(double mu_over_hbar, Gauge g)
{
	PhysicalParams p;
	return {{p.with_mu(mu_over_hbar * p.hbar), {g, kDefaultOverlapHalfwidth}}};
}

std::vector<SweepPoint> mu_sweep_north_only()
{
	std::vector<SweepPoint> out;
	for (const auto& s : default_sweep())
		if (s.gauge.which == Gauge::North)
			out.push_back(s);
	return out;
}

IdentitySuite radial_part_suite()
{
	IdentitySuite s{"radial_part", "symmetrized radial gradient equals e_r (d/dr + 1/r)", {}, single_point(0.0, Gauge::North)};
	for (std::size_t i = 0; i < 3; ++i)
		s.identities.push_back(operator_identity(
		    std::string("(1/2)(e_r.grad + grad.e_r) e_r, ") + kAxis[i] + " == e_r(d/dr + 1/r)", "Eq. (6)", 1e-10,
		    GridPolicy::Full, [i](const OperatorSet& o) { return o.vec("grad_par_sym")[i]; },
		    [i](const OperatorSet& o) { return o.vec("grad_par")[i]; }));
	return s;
}

IdentitySuite decomposition_suite()
{
	IdentitySuite s{"decomposition", "Cartesian gradient splits into radial and transverse parts", {}, single_point(0.0, Gauge::North)};
	for (std::size_t i = 0; i < 3; ++i)
	{
		s.identities.push_back(operator_identity(
		    std::string("grad_sp,") + kAxis[i] + " == grad_par," + kAxis[i] + " + grad_perp," + kAxis[i], "Eqs. (5a), (7)",
		    1e-10, GridPolicy::Full, [i](const OperatorSet& o) { return o.vec("grad_cart")[i]; },
		    [i](const OperatorSet& o) { return o.vec("grad_par")[i] + o.vec("grad_perp")[i]; }));
		s.identities.push_back(operator_identity(
		    std::string("P_perp,") + kAxis[i] + " == -i hbar grad_perp," + kAxis[i], "Eqs. (9), (10)", 1e-10, GridPolicy::Full,
		    [i](const OperatorSet& o) { return o.vec("P_perp")[i]; },
		    [i](const OperatorSet& o) { return Complex(0.0, -o.params().hbar) * o.vec("grad_perp")[i]; }));
	}
	return s;
}

IdentitySuite transversality_suite()
{
	IdentitySuite s{"transversality", "e_r.Pi(A) + Pi(A).e_r vanishes", {}, default_sweep()};
	s.identities.push_back(operator_identity(
	    "e_r.Pi(A) + Pi(A).e_r == 0", "Eq. (8)", 1e-10, GridPolicy::GaugePatch,
	    [](const OperatorSet& o) {
		    return symmetric_dot({radial_unit(0), radial_unit(1), radial_unit(2)}, o.vec("Pi"));
	    },
	    [](const OperatorSet&) { return FirstOrderOperator::zero(); }));
	return s;
}

IdentitySuite r2_commutant_suite()
{
	IdentitySuite s{"r2_commutants", "r^2 commutes with L(A) and Pi(A)", {}, default_sweep()};
	const ScalarField r2 = [](const JetContext& c) { return pow(c.var(Coord::R), 2); };
	for (std::size_t i = 0; i < 3; ++i)
		for (const char* stem : {"L", "Pi"})
		{
			const std::string name = std::string(stem) + "_" + kAxis[i];
			s.identities.push_back(operator_identity(
			    "[r^2, " + std::string(stem) + "_" + kAxis[i] + "(A)] == 0", "Eq. (13)", 1e-12, GridPolicy::GaugePatch,
			    [name, r2](const OperatorSet& o) {
				    return commutator(FirstOrderOperator::multiplication(r2, "r^2"), o.get(name));
			    },
			    [](const OperatorSet&) { return FirstOrderOperator::zero(); }));
		}
	return s;
}

Identity literal_ordering_guard(std::string label, std::string eq, std::string stem, bool scale_by_r)
{
	Identity id;
	id.label = std::move(label);
	id.paper_eq = std::move(eq);
	id.tolerance = 1e-10;
	id.grid = GridPolicy::Full;
	id.check = [stem, scale_by_r, lbl = id.label](const CheckContext& c) {
		VectorOperator v = c.ops.vec(stem);
		if (scale_by_r)
			v = times_r(v);
		return scalar_report(lbl, literal_cross_second_order_residual(v, v, c.grid), c.tolerance, c.grid.points.size());
	};
	return id;
}

IdentitySuite so31_flat_suite()
{
	IdentitySuite s{"so31_flat", "so(3,1) closure of L and r Pi without monopole", {}, single_point(0.0, Gauge::North)};
	for (std::size_t k = 0; k < 3; ++k)
	{
		s.identities.push_back(operator_identity(
		    std::string("((r Pi) x (r Pi))_") + kAxis[k] + " == -i hbar L_" + kAxis[k], "Eq. (14)", kDefaultIdentityTolerance,
		    GridPolicy::Full,
		    [k](const OperatorSet& o) {
			    const auto rpi = times_r(o.vec("P_perp"));
			    return cross(rpi, rpi)[k];
		    },
		    [k](const OperatorSet& o) { return Complex(0.0, -o.params().hbar) * o.vec("L0")[k]; }));
		s.identities.push_back(operator_identity(
		    std::string("(L x (r Pi))_") + kAxis[k] + " == i hbar (r Pi)_" + kAxis[k], "Eq. (14)", kDefaultIdentityTolerance,
		    GridPolicy::Full, [k](const OperatorSet& o) { return cross(o.vec("L0"), times_r(o.vec("P_perp")))[k]; },
		    [k](const OperatorSet& o) { return Complex(0.0, o.params().hbar) * times_r(o.vec("P_perp")[k]); }));
	}
	s.identities.push_back(literal_ordering_guard("(r Pi) x (r Pi) literal ordering is first order", "Eq. (14)", "P_perp", true));
	return s;
}

IdentitySuite so3_no_monopole_suite()
{
	IdentitySuite s{"so3_no_monopole", "angular momentum algebra at A = 0", {}, single_point(0.0, Gauge::North)};
	for (std::size_t k = 0; k < 3; ++k)
		s.identities.push_back(operator_identity(
		    std::string("(L x L)_") + kAxis[k] + " == i hbar L_" + kAxis[k], "Eq. (16), A = 0", kDefaultIdentityTolerance,
		    GridPolicy::Full, [k](const OperatorSet& o) { return cross(o.vec("L0"), o.vec("L0"))[k]; },
		    [k](const OperatorSet& o) { return Complex(0.0, o.params().hbar) * o.vec("L0")[k]; }));
	s.identities.push_back(literal_ordering_guard("L x L literal ordering is first order", "Eq. (16), A = 0", "L0", false));
	return s;
}

IdentitySuite so31_monopole_suite()
{
	IdentitySuite s{"so31_monopole", "so(3,1) closure of L(A) and r Pi(A)", {}, default_sweep()};
	for (std::size_t k = 0; k < 3; ++k)
	{
		const auto [i, j] = kCyclic[k];
		const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
		s.identities.push_back(operator_identity(
		    std::string("[L_") + kAxis[ui] + "(A), L_" + kAxis[uj] + "(A)] == i hbar L_" + kAxis[k] + "(A)", "Eq. (16)",
		    kDefaultIdentityTolerance, GridPolicy::GaugePatch,
		    [ui, uj](const OperatorSet& o) { return commutator(o.vec("L")[ui], o.vec("L")[uj]); },
		    [k](const OperatorSet& o) { return Complex(0.0, o.params().hbar) * o.vec("L")[k]; }));
		s.identities.push_back(operator_identity(
		    std::string("[r Pi_") + kAxis[ui] + "(A), r Pi_" + kAxis[uj] + "(A)] == -i hbar L_" + kAxis[k] + "(A)",
		    "Eq. (21)", kDefaultIdentityTolerance, GridPolicy::GaugePatch,
		    [ui, uj](const OperatorSet& o) { return commutator(times_r(o.vec("Pi")[ui]), times_r(o.vec("Pi")[uj])); },
		    [k](const OperatorSet& o) { return Complex(0.0, -o.params().hbar) * o.vec("L")[k]; }));
	}
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			s.identities.push_back(operator_identity(
			    std::string("[L_") + kAxis[i] + "(A), r Pi_" + kAxis[j] + "(A)] == i hbar eps_" + kAxis[i] + kAxis[j] +
			        "k r Pi_k(A)",
			    "Eq. (20)", kDefaultIdentityTolerance, GridPolicy::GaugePatch,
			    [i, j](const OperatorSet& o) { return commutator(o.vec("L")[i], times_r(o.vec("Pi")[j])); },
			    [i, j](const OperatorSet& o) {
				    FirstOrderOperator rhs = FirstOrderOperator::zero();
				    for (std::size_t k = 0; k < 3; ++k)
				    {
					    const int e = levi_civita(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
					    if (e != 0)
						    rhs = rhs + Complex(0.0, e * o.params().hbar) * times_r(o.vec("Pi")[k]);
				    }
				    return rhs;
			    }));
	return s;
}

IdentitySuite monopole_field_suite()
{
	IdentitySuite s{"monopole_field", "curl of the patch potentials is the radial monopole field", {}, default_sweep()};
	s.identities.push_back(operator_identity(
	    "(curl A).e_r == g / r^2", "Eqs. (17), (18)", kDefaultIdentityTolerance, GridPolicy::GaugePatch,
	    [](const OperatorSet& o) {
		    return FirstOrderOperator::multiplication(radial_field_strength(o.params(), o.gauge()), "(curl A).e_r");
	    },
	    [](const OperatorSet& o) { return FirstOrderOperator::multiplication(monopole_field(o.params()), "g/r^2"); }));
	return s;
}

IdentitySuite gauge_covariance_suite()
{
	IdentitySuite s{"gauge_covariance", "L_z forms of the two patches and the gauge map between them", {}, default_sweep()};
	s.identities.push_back(operator_identity(
	    "L_z(A) == -i hbar d/dphi -+ mu (north -, south +)", "Eqs. (23), (26)", 1e-10, GridPolicy::GaugePatch,
	    [](const OperatorSet& o) { return o.get("L_z"); }, [](const OperatorSet& o) { return o.get("Lz_closed"); }));

	// The conjugation identities need both patches, so they only run from
	// the north sweep points and are evaluated on the overlap.
	auto both = [](const CheckContext& c) {
		GaugeChoice north = c.sweep.gauge, south = c.sweep.gauge;
		north.which = Gauge::North;
		south.which = Gauge::South;
		return std::pair{north, south};
	};
	Identity lz_map;
	lz_map.label = "exp(-i Lambda) L_z(A_N) exp(i Lambda) == L_z(A_S), inverse maps back";
	lz_map.paper_eq = "Eqs. (23), (26)";
	lz_map.tolerance = 1e-10;
	lz_map.grid = GridPolicy::Overlap;
	lz_map.check = [both, lbl = lz_map.label](const CheckContext& c) {
		const auto [north, south] = both(c);
		const auto& p = c.sweep.params;
		const ScalarField phase = gauge_function(p, 1e-10, north.overlap_halfwidth).phase;
		const ScalarField inverse = [phase](const JetContext& j) { return -phase(j); };
		const auto forward = operator_equal(conjugate(lz_closed_form(p, Gauge::North), phase), lz_closed_form(p, Gauge::South),
		                                    c.grid, c.tolerance, lbl);
		const auto backward = operator_equal(conjugate(lz_closed_form(p, Gauge::South), inverse),
		                                     lz_closed_form(p, Gauge::North), c.grid, c.tolerance, lbl);
		const auto built = operator_equal(conjugate(angular_momentum_gauged(p, north)[2], phase),
		                                  angular_momentum_gauged(p, south)[2], c.grid, c.tolerance, lbl);
		OperatorIdentityReport worst = forward;
		for (const auto* r : {&backward, &built})
			if (!(r->max_abs_residual <= worst.max_abs_residual))
				worst = *r;
		worst.pass = forward.pass && backward.pass && built.pass;
		return worst;
	};
	s.identities.push_back(lz_map);

	for (std::size_t i = 0; i < 3; ++i)
	{
		Identity pi_map;
		pi_map.label = std::string("exp(-i Lambda) Pi_") + kAxis[i] + "(A_N) exp(i Lambda) == Pi_" + kAxis[i] + "(A_S)";
		pi_map.paper_eq = "Eqs. (17), (18)";
		pi_map.tolerance = 1e-10;
		pi_map.grid = GridPolicy::Overlap;
		pi_map.check = [both, i, lbl = pi_map.label](const CheckContext& c) {
			const auto [north, south] = both(c);
			const auto& p = c.sweep.params;
			const ScalarField phase = gauge_function(p, 1e-10, north.overlap_halfwidth).phase;
			return operator_equal(conjugate(geometric_momentum_gauged(p, north)[i], phase),
			                      geometric_momentum_gauged(p, south)[i], c.grid, c.tolerance, lbl);
		};
		s.identities.push_back(pi_map);
	}

	Identity defining;
	defining.label = "A_N - A_S == (hbar c / q) grad Lambda on the overlap";
	defining.paper_eq = "Eqs. (17), (18)";
	defining.tolerance = 1e-10;
	defining.grid = GridPolicy::Overlap;
	defining.check = [lbl = defining.label](const CheckContext& c) {
		const auto gf = gauge_function(c.sweep.params, std::numeric_limits<double>::infinity(), c.sweep.gauge.overlap_halfwidth);
		return scalar_report(lbl, gf.defining_residual, c.tolerance, gf.sample_points);
	};
	s.identities.push_back(defining);
	return s;
}

IdentitySuite commutator_oracle_suite()
{
	IdentitySuite s{"commutator_oracle", "closed-form commutators against double application on catalog states", {},
	                mu_sweep_north_only()};
	auto add = [&s](std::string label, std::string eq, std::string a, std::string b, bool scale_b) {
		Identity id;
		id.label = std::move(label);
		id.paper_eq = std::move(eq);
		id.grid = GridPolicy::GaugePatch;
		id.check = [a, b, scale_b, lbl = id.label](const CheckContext& c) {
			std::vector<SpherePoint> pts;
			const std::size_t stride = std::max<std::size_t>(1, c.grid.points.size() / 50);
			for (std::size_t k = 0; k < c.grid.points.size() && pts.size() < 50; k += stride)
				pts.push_back(c.grid.points[k]);
			const FirstOrderOperator rhs = scale_b ? times_r(c.ops.get(b)) : c.ops.get(b);
			const double res = commutator_oracle_residual(c.ops.get(a), rhs, test_function_catalog(c.seed), pts);
			return scalar_report(lbl, res, c.tolerance, pts.size());
		};
		s.identities.push_back(std::move(id));
	};
	for (std::size_t i = 0; i < 3; ++i)
	{
		for (std::size_t j = 0; j < 3; ++j)
			add(std::string("[L_") + kAxis[i] + "(A), r Pi_" + kAxis[j] + "(A)] f closed form == double application",
			    "Eq. (20)", std::string("L_") + kAxis[i], std::string("Pi_") + kAxis[j], true);
		const auto [a, b] = kCyclic[i];
		add(std::string("[L_") + kAxis[static_cast<std::size_t>(a)] + "(A), L_" + kAxis[static_cast<std::size_t>(b)] +
		        "(A)] f closed form == double application",
		    "Eq. (16)", std::string("L_") + kAxis[static_cast<std::size_t>(a)], std::string("L_") + kAxis[static_cast<std::size_t>(b)],
		    false);
		add(std::string("[Pi_") + kAxis[static_cast<std::size_t>(a)] + "(A), Pi_" + kAxis[static_cast<std::size_t>(b)] +
		        "(A)] f closed form == double application",
		    "Eq. (21)", std::string("Pi_") + kAxis[static_cast<std::size_t>(a)],
		    std::string("Pi_") + kAxis[static_cast<std::size_t>(b)], false);
	}
	return s;
}

IdentitySuite quantization_suite()
{
	IdentitySuite s{"quantization", "L_z spectra, Dirac condition, Aharonov-Bohm phase and flux quanta", {}, mu_sweep_north_only()};

	Identity spectrum;
	spectrum.label = "L_z(A) e^{i m phi} == (m hbar -+ mu) e^{i m phi}, |m| <= 3, both patches";
	spectrum.paper_eq = "Eqs. (23), (26)";
	spectrum.tolerance = kSpectrumTolerance;
	spectrum.grid = GridPolicy::Full;
	spectrum.check = [lbl = spectrum.label](const CheckContext& c) {
		double worst = 0.0;
		for (Gauge g : {Gauge::North, Gauge::South})
		{
			GaugeChoice gc = c.sweep.gauge;
			gc.which = g;
			try
			{
				worst = std::max(worst, lz_spectrum(c.sweep.params, gc, -3, 3).operator_residual);
			}
			catch (const std::runtime_error&)
			{
				worst = std::numeric_limits<double>::infinity();
			}
		}
		return scalar_report(lbl, worst, c.tolerance, 10);
	};
	s.identities.push_back(spectrum);

	Identity dirac;
	dirac.label = "patch spectra coincide iff 2 mu / hbar is an integer";
	dirac.paper_eq = "Eq. (27)";
	dirac.tolerance = 0.0;
	dirac.grid = GridPolicy::Full;
	dirac.check = [lbl = dirac.label](const CheckContext& c) {
		// The sweep coupling plus mu/hbar = k/10 for |k| <= 30.
		std::vector<PhysicalParams> cases{c.sweep.params};
		for (int k = -30; k <= 30; ++k)
			cases.push_back(c.sweep.params.with_mu(0.1 * k * c.sweep.params.hbar));
		double disagreements = 0.0;
		for (const auto& p : cases)
		{
			const double twice = 2.0 * p.mu() / p.hbar;
			const bool arithmetic = std::abs(twice - std::round(twice)) <= kDiracTolerance;
			disagreements += arithmetic == spectra_coincide(p) ? 0.0 : 1.0;
		}
		return scalar_report(lbl, disagreements, 0.0, cases.size());
	};
	s.identities.push_back(dirac);

	Identity ab;
	ab.label = "mu dOmega / hbar == (q / hbar c) g dS / r^2 over dOmega in [0, 4 pi]";
	ab.paper_eq = "Eqs. (24), (25)";
	ab.tolerance = 1e-13;
	ab.grid = GridPolicy::Full;
	ab.check = [lbl = ab.label](const CheckContext& c) {
		double worst = 0.0;
		for (int k = 0; k <= 16; ++k)
		{
			const double omega = 4 * kPi * k / 16.0;
			const double a = c.sweep.params.mu() * omega / c.sweep.params.hbar;
			const double b = ab_phase_from_flux(c.sweep.params, omega);
			worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
		}
		return scalar_report(lbl, worst, c.tolerance, 17);
	};
	s.identities.push_back(ab);

	Identity flux;
	flux.label = "total flux m phi_0 at dOmega = 4 pi and g dOmega == m phi_0 dOmega / 4 pi when mu = m hbar / 2";
	flux.paper_eq = "Eq. (29)";
	flux.tolerance = 1e-12;
	flux.grid = GridPolicy::Full;
	flux.check = [lbl = flux.label](const CheckContext& c) {
		double worst = 0.0;
		const PhysicalParams base = c.sweep.params;
		for (int m = -3; m <= 3; ++m)
		{
			const PhysicalParams p = base.with_mu(0.5 * m * base.hbar);
			const double phi0 = flux_quantum(p);
			worst = std::max(worst, std::abs(quantized_flux(p, m, 4 * kPi) - m * phi0) / std::max(1.0, std::abs(phi0)));
			for (double omega : {0.0, 0.1, 1.0, 4 * kPi})
				worst = std::max(worst, std::abs(quantized_flux(p, m, omega) - p.g * omega) / std::max(1.0, std::abs(phi0)));
		}
		return scalar_report(lbl, worst, c.tolerance, 7);
	};
	s.identities.push_back(flux);
	return s;
}

Grid grid_for(const RunOptions& options, const SweepPoint& sp, GridPolicy policy)
{
	GridSpec spec = options.grid;
	spec.radius = sp.params.r;
	spec.overlap_halfwidth = sp.gauge.overlap_halfwidth;
	switch (policy)
	{
	case GridPolicy::GaugePatch: spec.domain = sp.gauge.domain(); break;
	case GridPolicy::Overlap: spec.domain = GaugeDomain::Overlap; break;
	case GridPolicy::Full: spec.domain = GaugeDomain::Full; break;
	}
	if (spec.jitter_seed)
		spec.jitter_seed = *spec.jitter_seed ^ options.seed;
	return make_grid(spec);
}

}  // namespace

Identity operator_identity(std::string label, std::string paper_eq, double tolerance, GridPolicy grid,
                           std::function<FirstOrderOperator(const OperatorSet&)> lhs,
                           std::function<FirstOrderOperator(const OperatorSet&)> rhs)
{
	Identity id;
	id.label = std::move(label);
	id.paper_eq = std::move(paper_eq);
	id.tolerance = tolerance;
	id.grid = grid;
	id.check = [lhs = std::move(lhs), rhs = std::move(rhs), lbl = id.label](const CheckContext& c) {
		return operator_equal(lhs(c.ops), rhs(c.ops), c.grid, c.tolerance, lbl);
	};
	return id;
}

std::vector<SweepPoint> default_sweep()
{
	std::vector<SweepPoint> out;
	PhysicalParams base;
	for (Gauge g : {Gauge::North, Gauge::South})
		for (double k : {0.0, 0.5, 1.0, 1.5})
			out.push_back({base.with_mu(k * base.hbar), {g, kDefaultOverlapHalfwidth}});
	return out;
}

double commutator_oracle_residual(const FirstOrderOperator& a, const FirstOrderOperator& b,
                                  const std::vector<TestFunction>& functions, const std::vector<SpherePoint>& points)
{
	const FirstOrderOperator closed = commutator(a, b);
	double worst = 0.0;
	for (const auto& pt : points)
	{
		const JetContext c0{pt, 0, Chart::Spatial};
		const JetContext c1{pt, 1, Chart::Spatial};
		const JetContext c2{pt, 2, Chart::Spatial};
		const auto a1 = a.coefficients(c1);
		const auto b1 = b.coefficients(c1);
		const auto a0 = a1.truncated(0), b0 = b1.truncated(0);
		for (const auto& f : functions)
		{
			const Jet fj = f.evaluate(c2);
			const Complex viaClosed = apply(closed.coefficients(c0), fj.truncated(1)).value();
			const Complex viaDouble = apply(a0, apply(b1, fj)).value() - apply(b0, apply(a1, fj)).value();
			worst = std::max(worst, std::abs(viaClosed - viaDouble));
		}
	}
	return worst;
}

SuiteReport run_suite(const IdentitySuite& suite, const RunOptions& options)
{
	SuiteReport rep;
	rep.name = suite.name;
	const auto& sweep = options.sweep ? *options.sweep : suite.params_sweep;
	for (const auto& sp : sweep)
	{
		std::optional<OperatorSet> ops;
		std::string build_error;
		try
		{
			ops.emplace(sp.params, sp.gauge, options.perturbation);
		}
		catch (const std::exception& e)
		{
			build_error = e.what();
		}
		for (const auto& id : suite.identities)
		{
			ReportEntry entry;
			entry.label = id.label;
			entry.paper_eq = id.paper_eq;
			entry.mu_over_hbar = sp.params.mu() / sp.params.hbar;
			entry.gauge = to_string(sp.gauge.which);
			const double tol = options.tolerance.value_or(id.tolerance);
			entry.result.identity_label = id.label;
			entry.result.tolerance = tol;
			if (!ops)
				entry.error = build_error;
			else
			{
				try
				{
					const Grid grid = grid_for(options, sp, id.grid);
					entry.result = id.check(CheckContext{sp, *ops, grid, tol, options.seed});
					entry.result.tolerance = tol;
				}
				catch (const std::exception& e)
				{
					entry.error = e.what();
					entry.result.pass = false;
				}
			}
			if (!entry.error.empty())
				entry.result.pass = false;
			rep.entries.push_back(std::move(entry));
		}
	}
	std::stable_sort(rep.entries.begin(), rep.entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
		return std::tie(a.label, a.gauge, a.mu_over_hbar) < std::tie(b.label, b.gauge, b.mu_over_hbar);
	});
	rep.pass = std::all_of(rep.entries.begin(), rep.entries.end(), [](const ReportEntry& e) { return e.result.pass; });
	return rep;
}

Report run_suites(const std::vector<IdentitySuite>& suites, const RunOptions& options)
{
	Report rep;
	for (const auto& s : suites)
		rep.suites.push_back(run_suite(s, options));
	rep.pass = std::all_of(rep.suites.begin(), rep.suites.end(), [](const SuiteReport& s) { return s.pass; });
	return rep;
}

std::vector<IdentitySuite> builtin_suites()
{
	return {radial_part_suite(),    decomposition_suite(),  transversality_suite(), r2_commutant_suite(),
	        so31_flat_suite(),      so3_no_monopole_suite(), so31_monopole_suite(), monopole_field_suite(),
	        gauge_covariance_suite(), commutator_oracle_suite(), quantization_suite()};
}

std::optional<IdentitySuite> find_suite(const std::string& name)
{
	for (auto& s : builtin_suites())
		if (s.name == name)
			return s;
	return std::nullopt;
}

}  // namespace mono
