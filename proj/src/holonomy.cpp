#include "mono/holonomy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "mono/quantization.hpp"

namespace mono
{

namespace
{

FirstOrderOperator project(const VectorOperator& v, const Vec3& n)
{
	FirstOrderOperator out = FirstOrderOperator::zero();
	for (std::size_t i = 0; i < 3; ++i)
		if (n[i] != 0.0)
			out = out + Complex(n[i], 0.0) * v[i];
	return out;
}

/// Coefficient jets of the loop generators at one point, expanded once and
/// reused across functions and loop sizes.
struct LoopGenerators
{
	OperatorCoefficients pi_u;
	OperatorCoefficients pi_v;
	OperatorCoefficients l_w;
};

LoopGenerators generators(const PhysicalParams& params, const GaugeChoice& gauge, const LoopFrame& frame,
                          const SpherePoint& p, int series_order, int loops)
{
	const auto pi = geometric_momentum_gauged(params, gauge);
	const auto l = angular_momentum_gauged(params, gauge);
	const JetContext deep{p, loops * 4 * series_order - 1, Chart::Surface};
	const JetContext shallow{p, series_order - 1, Chart::Surface};
	return {project(pi, frame.u).coefficients(deep), project(pi, frame.v).coefficients(deep),
	        project(l, frame.w).coefficients(shallow)};
}

struct LoopValue
{
	Complex measured;
	Complex predicted;
	double last_term_ratio = 0.0;
};

Jet run_loop(const LoopGenerators& g, Complex tx, Complex ty, Jet f, int k, double& worst, bool inverse)
{
	double ratio = 0.0;
	auto step = [&](const OperatorCoefficients& o, Complex t) {
		f = exp_series(o, t, f, k, &ratio);
		worst = std::max(worst, ratio);
	};
	// Right to left: the factor written last acts first.
	step(g.pi_u, -tx);
	step(g.pi_v, -ty);
	step(g.pi_u, tx);
	step(g.pi_v, ty);
	if (inverse)
	{
		step(g.pi_v, -ty);
		step(g.pi_u, -tx);
		step(g.pi_v, ty);
		step(g.pi_u, tx);
	}
	return f;
}

LoopValue loop_value(const LoopGenerators& g, const LoopSpec& spec, const TestFunction& f, const SpherePoint& p)
{
	const int k = spec.series_order;
	const double hbar = spec.params.hbar;
	const double sign = spec.orientation == Orientation::Forward ? 1.0 : -1.0;
	const Complex tx(0.0, sign * spec.alpha() / hbar);
	const Complex ty(0.0, spec.beta() / hbar);

	LoopValue out;
	const Jet fj = f.evaluate(JetContext{p, 4 * k, Chart::Surface});
	out.measured = run_loop(g, tx, ty, fj, k, out.last_term_ratio, false).value();

	// The reversed loop is the same construction with alpha -> -alpha, so
	// its prediction carries the opposite solid angle.
	const Complex tl(0.0, -sign * spec.delta_omega() / hbar);
	double ratio = 0.0;
	out.predicted = exp_series(g.l_w, tl, fj.truncated(k), k, &ratio).value();
	out.last_term_ratio = std::max(out.last_term_ratio, ratio);
	return out;
}

HolonomyEntry make_entry(const LoopSpec& spec, const TestFunction& f, const SpherePoint& p, const LoopValue& v)
{
	HolonomyEntry e;
	e.function_id = f.id;
	e.point = p;
	e.initial = f.evaluate(JetContext{p, 0, Chart::Surface}).value();
	e.measured = v.measured;
	e.predicted = v.predicted;
	e.delta_omega = spec.delta_omega();
	e.residual = std::abs(v.measured - v.predicted);
	e.phase = e.initial == Complex{} ? 0.0 : std::arg(v.measured / e.initial);
	e.last_term_ratio = v.last_term_ratio;
	return e;
}

/// The state whose L_z(A) eigenvalue is -mu in either patch: 1 in the north
/// gauge and its gauge image exp(-i Lambda) in the south gauge.
TestFunction phase_probe(const PhysicalParams& p, Gauge which)
{
	if (which == Gauge::North)
		return {"one", [](const JetContext& c) { return c.constant(1.0); }, 0};
	const double k = 2.0 * p.mu() / p.hbar;
	return {"exp(-i Lambda)", [k](const JetContext& c) { return exp(Complex(0.0, -k) * c.var(Coord::Phi)); }, 0};
}

}  // namespace

Jet exp_series(const OperatorCoefficients& o, Complex t, const Jet& g, int series_order, double* last_term_ratio)
{
	if (series_order < 1)
		throw std::invalid_argument("exp_series: series order must be positive");
	const int out_order = g.order() - series_order;
	if (out_order < 0)
		throw std::invalid_argument("exp_series: function jet order below series order");

	Jet term = g;
	Jet sum = g.truncated(out_order);
	// Odd or even terms can vanish at the base point, so the last term is
	// compared with the larger of the two before it.
	double before = 0.0, previous = 0.0, last = 0.0;
	for (int n = 1; n <= series_order; ++n)
	{
		term = apply(o, term);
		term *= t / static_cast<double>(n);
		const Jet kept = term.truncated(out_order);
		sum += kept;
		before = previous;
		previous = last;
		last = std::abs(kept.value());
	}
	const double scale = std::max(std::abs(sum.value()), 1e-300);
	const bool growing = series_order >= 3 && last > std::max(previous, before) && last > 1e-15 * scale;
	if (growing || last > kSeriesTailLimit * scale)
		throw SeriesDivergence("exp_series: last kept term " + std::to_string(last / scale) +
		                       " of the sum; step too large for the series order");
	if (last_term_ratio)
		*last_term_ratio = last / scale;
	return sum;
}

ExpApplyResult exp_apply(const FirstOrderOperator& o, Complex t, const TestFunction& f, const SpherePoint& p, int series_order,
                         Chart chart)
{
	const JetContext ctx{p, series_order + 1, chart};
	const Jet fj = f.evaluate(ctx);
	JetContext low = ctx;
	low.order = ctx.order - 1;
	ExpApplyResult r;
	r.value = exp_series(o.coefficients(low), t, fj, series_order, &r.last_term_ratio).value();
	return r;
}

LoopFrame rotated_frame(double theta, double phi)
{
	const Frame f = Frame::at(SpherePoint{1.0, theta, phi});
	return {f.e_theta, f.e_phi, f.e_r};
}

double LoopSpec::alpha() const
{
	const double r = params.r;
	if (!(delta_z > 0.0 && delta_z < r))
		throw std::invalid_argument("LoopSpec: delta_z must lie in (0, r)");
	return std::sqrt(r * delta_z - 0.5 * delta_z * delta_z);
}

double LoopSpec::delta_omega() const { return alpha() * beta() / (params.r * params.r); }

HolonomyEntry gido_loop(const LoopSpec& spec, const TestFunction& f, const SpherePoint& p)
{
	if (!in_domain(spec.gauge.domain(), p.theta, spec.gauge.overlap_halfwidth))
		throw GaugeDomainError("gido_loop: point outside the gauge patch");
	const auto g = generators(spec.params, spec.gauge, spec.frame, p, spec.series_order, 1);
	return make_entry(spec, f, p, loop_value(g, spec, f, p));
}

double group_inverse_residual(const LoopSpec& spec, const TestFunction& f, const SpherePoint& p)
{
	const int k = spec.series_order;
	const auto g = generators(spec.params, spec.gauge, spec.frame, p, k, 2);
	const Complex tx(0.0, spec.alpha() / spec.params.hbar);
	const Complex ty(0.0, spec.beta() / spec.params.hbar);
	const Jet fj = f.evaluate(JetContext{p, 8 * k, Chart::Surface});
	double worst = 0.0;
	return std::abs(run_loop(g, tx, ty, fj, k, worst, true).value() - fj.value());
}

std::vector<SpherePoint> pole_points(int n_theta, int n_phi, double margin, double r)
{
	if (n_theta < 1 || n_phi < 1 || !(margin > 0.0 && margin <= 0.5))
		throw std::invalid_argument("pole_points: bad grid");
	std::vector<SpherePoint> out;
	for (int i = 0; i < n_theta; ++i)
	{
		const double theta = n_theta == 1 ? margin : margin + (0.5 - margin) * i / (n_theta - 1);
		for (int j = 0; j < n_phi; ++j)
			out.push_back({r, theta, 2 * kPi * j / n_phi});
	}
	return out;
}

SpherePoint point_near_pole(const LoopFrame& frame, double theta, double phi, double r)
{
	Vec3 x;
	for (std::size_t i = 0; i < 3; ++i)
		x[i] = std::cos(theta) * frame.w[i] + std::sin(theta) * (std::cos(phi) * frame.u[i] + std::sin(phi) * frame.v[i]);
	const double t = std::acos(std::clamp(x[2], -1.0, 1.0));
	double ph = std::atan2(x[1], x[0]);
	if (ph < 0.0)
		ph += 2 * kPi;
	return {r, t, ph};
}

std::vector<LoopFrame> alternative_poles()
{
	return {rotated_frame(1.0, 0.4), rotated_frame(1.3, 2.5), rotated_frame(1.6, 4.4)};
}

ScanResult convergence_scan(const ScanConfig& config)
{
	if (config.delta_z.size() < 4)
		throw std::invalid_argument("convergence_scan: need at least 4 delta_z values");
	const auto [lo, hi] = std::minmax_element(config.delta_z.begin(), config.delta_z.end());
	if (!(*lo > 0.0) || *hi / *lo < 100.0 * (1.0 - 1e-12))
		throw std::invalid_argument("convergence_scan: delta_z values must be positive and span two decades");

	const bool standard = config.frame.w == LoopFrame{}.w;
	const auto functions = config.functions.empty() ? test_function_catalog(config.seed) : config.functions;
	std::vector<SpherePoint> points = config.points;
	if (points.empty())
	{
		if (standard)
			points = pole_points(1, 4, kScanThetaMargin, config.params.r);
		else
			for (double t : {0.0, kDefaultThetaMargin, 0.3})
				for (double ph : {0.0, kPi / 2, kPi, 3 * kPi / 2})
				{
					points.push_back(point_near_pole(config.frame, t, ph, config.params.r));
					if (t == 0.0)
						break;
				}
	}
	const SpherePoint phase_point = config.phase_point.value_or(
	    standard ? SpherePoint{config.params.r, kScanThetaMargin, 0.0} : point_near_pole(config.frame, 0.0, 0.0, config.params.r));
	const TestFunction probe = phase_probe(config.params, config.gauge.which);

	struct Job
	{
		SpherePoint point;
		std::vector<TestFunction> fns;
		bool phase = false;
	};
	std::vector<Job> jobs;
	for (const auto& p : points)
		jobs.push_back({p, functions, false});
	jobs.push_back({phase_point, {probe}, true});

	const std::size_t nz = config.delta_z.size();
	std::vector<std::vector<double>> residual(jobs.size(), std::vector<double>(nz, 0.0));
	std::vector<double> phase(nz, 0.0);

	auto run_job = [&](std::size_t j) {
		const Job& job = jobs[j];
		if (!in_domain(config.gauge.domain(), job.point.theta, config.gauge.overlap_halfwidth))
			throw GaugeDomainError("convergence_scan: point outside the gauge patch");
		const auto g = generators(config.params, config.gauge, config.frame, job.point, config.series_order, 1);
		for (std::size_t z = 0; z < nz; ++z)
		{
			LoopSpec spec;
			spec.delta_z = config.delta_z[z];
			spec.series_order = config.series_order;
			spec.params = config.params;
			spec.gauge = config.gauge;
			spec.frame = config.frame;
			for (const auto& f : job.fns)
			{
				const auto e = make_entry(spec, f, job.point, loop_value(g, spec, f, job.point));
				residual[j][z] = std::max(residual[j][z], e.residual);
				if (job.phase)
					phase[z] = e.phase;
			}
		}
	};

	unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
	threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
	std::vector<std::future<void>> workers;
	std::atomic<std::size_t> next{0};
	for (unsigned t = 0; t < threads; ++t)
		workers.push_back(std::async(std::launch::async, [&] {
			for (std::size_t j = next++; j < jobs.size(); j = next++)
				run_job(j);
		}));
	for (auto& w : workers)
		w.get();

	ScanResult out;
	const double mu_over_hbar = config.params.mu() / config.params.hbar;
	for (std::size_t z = 0; z < nz; ++z)
	{
		LoopSpec spec;
		spec.delta_z = config.delta_z[z];
		spec.params = config.params;
		ScanRow row;
		row.delta_z = spec.delta_z;
		row.delta_omega = spec.delta_omega();
		for (const auto& r : residual)
			row.max_residual = std::max(row.max_residual, r[z]);
		row.extracted_phase = phase[z];
		row.predicted_phase = ab_phase(config.params, row.delta_omega);
		row.phase_error = std::abs(row.extracted_phase / row.delta_omega - mu_over_hbar);
		row.ab_phase_flux = ab_phase_from_flux(config.params, row.delta_omega);
		out.rows.push_back(row);
	}

	// Least squares on (log dOmega, log residual); rows with zero residual
	// carry no slope information.
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	int n = 0;
	for (const auto& r : out.rows)
		if (r.max_residual > 0.0)
		{
			const double x = std::log(r.delta_omega), y = std::log(r.max_residual);
			sx += x;
			sy += y;
			sxx += x * x;
			sxy += x * y;
			++n;
		}
	if (n >= 2)
		out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
	else
		out.warnings.push_back("fewer than two nonzero residuals; slope undefined");

	auto by_omega = out.rows;
	std::sort(by_omega.begin(), by_omega.end(), [](const ScanRow& a, const ScanRow& b) { return a.delta_omega > b.delta_omega; });
	for (std::size_t i = 1; i < by_omega.size(); ++i)
		if (by_omega[i].max_residual > by_omega[i - 1].max_residual)
			out.warnings.push_back("residual not monotone at delta_z = " + std::to_string(by_omega[i].delta_z));

	const auto& a = by_omega[by_omega.size() - 2];
	const auto& b = by_omega.back();
	const double ra = a.extracted_phase / a.delta_omega, rb = b.extracted_phase / b.delta_omega;
	const double p = out.slope - 1.0;
	if (p > 0.0 && std::isfinite(p))
	{
		const double sa = std::pow(a.delta_omega, p), sb = std::pow(b.delta_omega, p);
		out.extrapolated_ratio = (rb * sa - ra * sb) / (sa - sb);
	}
	else
		out.extrapolated_ratio = rb;
	out.extrapolated_error = std::abs(out.extrapolated_ratio - mu_over_hbar);
	return out;
}

}  // namespace mono
