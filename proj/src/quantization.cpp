#include "mono/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mono
{

namespace
{

std::vector<double> lattice(const PhysicalParams& p, Gauge which, int m_min, int m_max)
{
	const double shift = which == Gauge::North ? -p.mu() : p.mu();
	std::vector<double> out;
	for (int m = m_min; m <= m_max; ++m)
		out.push_back(m * p.hbar + shift);
	return out;
}

}  // namespace

SpectrumWindow lz_spectrum(const PhysicalParams& p, const GaugeChoice& gauge, int m_min, int m_max)
{
	if (m_min > m_max)
		throw std::invalid_argument("lz_spectrum: empty m range");
	p.validate();

	SpectrumWindow w;
	w.m_min = m_min;
	w.m_max = m_max;
	w.gauge = gauge;
	w.params = p;
	w.eigenvalues = lattice(p, gauge.which, m_min, m_max);

	GridSpec spec;
	spec.n_theta = 5;
	spec.n_phi = 4;
	spec.domain = gauge.domain();
	spec.radius = p.r;
	spec.overlap_halfwidth = gauge.overlap_halfwidth;
	Grid grid = make_grid(spec);
	if (grid.points.size() > 10)
		grid.points.resize(10);

	const FirstOrderOperator lz = angular_momentum_gauged(p, gauge)[2];
	for (int m = m_min; m <= m_max; ++m)
	{
		const ScalarField mode = [m](const JetContext& c) { return exp(Complex(0.0, m) * c.var(Coord::Phi)); };
		const double expected = w.eigenvalues[static_cast<std::size_t>(m - m_min)];
		for (const auto& pt : grid.points)
		{
			const JetContext ctx{pt, 1, Chart::Spatial};
			const Complex ratio = apply(lz, mode, ctx).value() / mode(ctx).value();
			w.operator_residual = std::max(w.operator_residual, std::abs(ratio - expected));
		}
	}
	if (!(w.operator_residual <= kSpectrumTolerance))
		throw std::runtime_error("lz_spectrum: constructed L_z(A) disagrees with m hbar -+ mu, residual " +
		                         std::to_string(w.operator_residual));
	return w;
}

bool spectra_coincide(const PhysicalParams& p, double tolerance)
{
	const double ratio = std::abs(p.mu()) / p.hbar;
	const int window = 2 + static_cast<int>(std::ceil(ratio));
	const int reach = window + static_cast<int>(std::ceil(ratio)) + 2;
	const auto north = lattice(p, Gauge::North, -reach, reach);
	const auto south = lattice(p, Gauge::South, -reach, reach);
	const double limit = window * p.hbar;

	auto covered = [&](const std::vector<double>& from, const std::vector<double>& in) {
		for (double v : from)
		{
			if (std::abs(v) > limit)
				continue;
			const bool hit = std::any_of(in.begin(), in.end(), [&](double w) { return std::abs(v - w) <= tolerance * p.hbar; });
			if (!hit)
				return false;
		}
		return true;
	};
	return covered(north, south) && covered(south, north);
}

DiracVerdict dirac_check(double mu, double hbar)
{
	if (!(hbar > 0.0))
		throw std::invalid_argument("dirac_check: hbar must be positive");
	DiracVerdict v;
	const double twice = 2.0 * mu / hbar;
	v.n = std::lround(twice);
	v.defect = std::abs(twice - static_cast<double>(v.n));
	v.allowed = v.defect <= kDiracTolerance;

	PhysicalParams p;
	p.hbar = hbar;
	p = p.with_mu(mu);
	v.spectra_coincide = spectra_coincide(p);
	if (v.spectra_coincide != v.allowed)
		throw std::logic_error("dirac_check: arithmetic and spectral verdicts disagree for mu = " + std::to_string(mu));
	return v;
}

double ab_phase_from_flux(const PhysicalParams& p, double delta_omega)
{
	const double area = p.r * p.r * delta_omega;
	const double flux = p.g * area / (p.r * p.r);
	return p.q / (p.hbar * p.c) * flux;
}

double ab_phase(const PhysicalParams& p, double delta_omega)
{
	if (!(delta_omega >= 0.0 && delta_omega <= 4 * kPi))
		throw std::invalid_argument("ab_phase: solid angle outside [0, 4 pi]");
	const double phase = p.mu() * delta_omega / p.hbar;
	const double flux_route = ab_phase_from_flux(p, delta_omega);
	if (std::abs(phase - flux_route) > 1e-13 * std::max(1.0, std::abs(phase)))
		throw std::logic_error("ab_phase: solid-angle and flux routes disagree");
	return phase;
}

double flux_quantum(const PhysicalParams& p)
{
	if (p.q == 0.0)
		throw std::invalid_argument("flux_quantum: electric charge is zero");
	return 2 * kPi * p.hbar * p.c / p.q;
}

double quantized_flux(const PhysicalParams& p, int m, double delta_omega)
{
	return m * flux_quantum(p) * delta_omega / (4 * kPi);
}

}  // namespace mono
