#include "mono/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mono
{

using nlohmann::json;

std::string format_number(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

namespace
{

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_string(std::ostringstream& out, const std::string& s)
{
	// Reuse the library's escaping for strings.
	out << json(s).dump();
}

void write(std::ostringstream& out, const json& j, int indent)
{
	const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
	const std::string close(static_cast<std::size_t>(indent), ' ');
	switch (j.type())
	{
	case json::value_t::object:
	{
		if (j.empty())
		{
			out << "{}";
			return;
		}
		out << "{\n";
		bool first = true;
		for (auto it = j.begin(); it != j.end(); ++it)
		{
			if (!first)
				out << ",\n";
			first = false;
			out << pad;
			write_string(out, it.key());
			out << ": ";
			write(out, it.value(), indent + 2);
		}
		out << "\n" << close << "}";
		return;
	}
	case json::value_t::array:
	{
		if (j.empty())
		{
			out << "[]";
			return;
		}
		out << "[\n";
		for (std::size_t i = 0; i < j.size(); ++i)
		{
			if (i)
				out << ",\n";
			out << pad;
			write(out, j[i], indent + 2);
		}
		out << "\n" << close << "]";
		return;
	}
	case json::value_t::number_float:
	{
		const double v = j.get<double>();
		if (std::isfinite(v))
			out << format_number(v);
		else
			out << "null";
		return;
	}
	default: out << j.dump();
	}
}

json params_json(const PhysicalParams& p)
{
	return {{"hbar", p.hbar}, {"c", p.c}, {"q", p.q}, {"g", p.g}, {"r", p.r}, {"mu", p.mu()}};
}

json meta_json(const RunMeta& meta)
{
	json grid = {{"n_theta", meta.grid.n_theta},
	             {"n_phi", meta.grid.n_phi},
	             {"theta_margin", meta.grid.theta_margin},
	             {"jitter", meta.grid.jitter_seed.has_value()}};
	return {{"command", meta.command},
	        {"seed", meta.seed},
	        {"tolerance_override", meta.tolerance ? json(*meta.tolerance) : json(nullptr)},
	        {"grid", grid}};
}

}  // namespace

std::string dump_json(const json& j)
{
	std::ostringstream out;
	write(out, j, 0);
	out << "\n";
	return out.str();
}

json report_json(const Report& report, const RunMeta& meta)
{
	json suites = json::array();
	std::size_t total = 0, failed = 0;
	for (const auto& s : report.suites)
	{
		json entries = json::array();
		for (const auto& e : s.entries)
		{
			json entry = {{"label", e.label},
			              {"paper_eq", e.paper_eq},
			              {"residual", number_or_null(e.result.max_abs_residual)},
			              {"tolerance", e.result.tolerance},
			              {"pass", e.result.pass},
			              {"mu_over_hbar", e.mu_over_hbar},
			              {"gauge", e.gauge},
			              {"grid_size", e.result.grid_size},
			              {"excluded_points", e.result.excluded_points}};
			if (!e.error.empty())
				entry["error"] = e.error;
			entries.push_back(std::move(entry));
			++total;
			failed += e.result.pass ? 0 : 1;
		}
		suites.push_back({{"name", s.name}, {"pass", s.pass}, {"entries", std::move(entries)}});
	}
	return {{"schema_version", kReportSchemaVersion},
	        {"run", meta_json(meta)},
	        {"pass", report.pass},
	        {"summary", {{"suites", report.suites.size()}, {"entries", total}, {"failed", failed}}},
	        {"suites", std::move(suites)}};
}

std::string report_text(const Report& report)
{
	std::ostringstream out;
	for (const auto& s : report.suites)
	{
		std::size_t failed = 0;
		for (const auto& e : s.entries)
			failed += e.result.pass ? 0 : 1;
		out << (s.pass ? "PASS " : "FAIL ") << s.name << "  (" << s.entries.size() - failed << "/" << s.entries.size()
		    << " entries)\n";
		for (bool want_fail : {true, false})
			for (const auto& e : s.entries)
			{
				if (e.result.pass == want_fail)
					continue;
				out << "  " << (e.result.pass ? "ok   " : "FAIL ") << e.label << "  [" << e.paper_eq
				    << "; mu/hbar=" << e.mu_over_hbar << ", " << e.gauge << "]  residual=" << e.result.max_abs_residual
				    << " tol=" << e.result.tolerance;
				if (!e.error.empty())
					out << "  error: " << e.error;
				out << "\n";
			}
	}
	out << (report.pass ? "all identities pass\n" : "verification FAILED\n");
	return out.str();
}

std::string scan_csv(const ScanResult& scan)
{
	std::ostringstream out;
	out << "delta_z,delta_omega,max_residual,extracted_phase,predicted_phase,phase_error\n";
	for (const auto& r : scan.rows)
		out << format_number(r.delta_z) << "," << format_number(r.delta_omega) << "," << format_number(r.max_residual) << ","
		    << format_number(r.extracted_phase) << "," << format_number(r.predicted_phase) << ","
		    << format_number(r.phase_error) << "\n";
	out << "slope," << format_number(scan.slope) << ",extrapolated_ratio," << format_number(scan.extrapolated_ratio)
	    << ",extrapolated_error," << format_number(scan.extrapolated_error) << "\n";
	return out.str();
}

std::string scan_text(const ScanResult& scan, double min_slope, double phase_tolerance)
{
	std::ostringstream out;
	char line[256];
	std::snprintf(line, sizeof line, "%10s %14s %12s %16s %16s %12s\n", "delta_z", "delta_omega", "residual", "phase",
	              "mu dOmega/hbar", "phase_err");
	out << line;
	for (const auto& r : scan.rows)
	{
		std::snprintf(line, sizeof line, "%10.3g %14.6e %12.4e %16.9e %16.9e %12.4e\n", r.delta_z, r.delta_omega,
		              r.max_residual, r.extracted_phase, r.predicted_phase, r.phase_error);
		out << line;
	}
	std::snprintf(line, sizeof line, "slope %.4f (minimum %.3g)\nextrapolated phase/dOmega %.10f, error %.3e (tolerance %.3g)\n",
	              scan.slope, min_slope, scan.extrapolated_ratio, scan.extrapolated_error, phase_tolerance);
	out << line;
	for (const auto& w : scan.warnings)
		out << "warning: " << w << "\n";
	return out.str();
}

json scan_json(const ScanResult& scan, const RunMeta& meta)
{
	json rows = json::array();
	for (const auto& r : scan.rows)
		rows.push_back({{"delta_z", r.delta_z},
		                {"delta_omega", r.delta_omega},
		                {"max_residual", r.max_residual},
		                {"extracted_phase", r.extracted_phase},
		                {"predicted_phase", r.predicted_phase},
		                {"phase_error", r.phase_error},
		                {"ab_phase_flux", r.ab_phase_flux}});
	return {{"schema_version", kReportSchemaVersion},
	        {"run", meta_json(meta)},
	        {"rows", std::move(rows)},
	        {"slope", number_or_null(scan.slope)},
	        {"extrapolated_ratio", scan.extrapolated_ratio},
	        {"extrapolated_error", scan.extrapolated_error},
	        {"warnings", scan.warnings}};
}

SpectrumReport spectrum_report(const PhysicalParams& p, int m_min, int m_max, double overlap_halfwidth)
{
	SpectrumReport s;
	s.params = p;
	s.m_min = m_min;
	s.m_max = m_max;
	s.north = lz_spectrum(p, {Gauge::North, overlap_halfwidth}, m_min, m_max);
	s.south = lz_spectrum(p, {Gauge::South, overlap_halfwidth}, m_min, m_max);
	s.dirac = dirac_check(p.mu(), p.hbar);
	return s;
}

std::string spectrum_text(const SpectrumReport& s)
{
	std::ostringstream out;
	char line[256];
	std::snprintf(line, sizeof line, "mu = %.6g hbar  (q = %g, g = %g, c = %g)\n", s.params.mu() / s.params.hbar, s.params.q,
	              s.params.g, s.params.c);
	out << line;
	std::snprintf(line, sizeof line, "%4s %14s %14s\n", "m", "north", "south");
	out << line;
	for (int m = s.m_min; m <= s.m_max; ++m)
	{
		const auto i = static_cast<std::size_t>(m - s.m_min);
		std::snprintf(line, sizeof line, "%4d %14.6f %14.6f\n", m, s.north.eigenvalues[i], s.south.eigenvalues[i]);
		out << line;
	}
	if (s.dirac.allowed)
		std::snprintf(line, sizeof line, "Dirac condition: allowed, n=%ld\n", s.dirac.n);
	else
		std::snprintf(line, sizeof line, "Dirac condition: forbidden, defect %.6g\n", s.dirac.defect);
	out << line;
	out << "spectra coincide: " << (s.dirac.spectra_coincide ? "yes" : "no") << "\n";

	if (s.params.q != 0.0)
	{
		const double phi0 = flux_quantum(s.params);
		std::snprintf(line, sizeof line, "flux quantum phi_0 = 2 pi hbar c / q = %.12g\n", phi0);
		out << line;
		std::snprintf(line, sizeof line, "%4s %20s %20s\n", "m", "total flux", "in phi_0");
		out << line;
		for (int m = s.m_min; m <= s.m_max; ++m)
		{
			const double total = quantized_flux(s.params, m, 4 * kPi) + 0.0;
			std::snprintf(line, sizeof line, "%4d %20.12g %17.12g phi_0\n", m, total, total / phi0 + 0.0);
			out << line;
		}
	}
	return out.str();
}

json spectrum_json(const SpectrumReport& s, const RunMeta& meta)
{
	json flux = json::array();
	const double phi0 = flux_quantum(s.params);
	for (int m = s.m_min; m <= s.m_max; ++m)
		flux.push_back({{"m", m}, {"total_flux", quantized_flux(s.params, m, 4 * kPi)}});
	return {{"schema_version", kReportSchemaVersion},
	        {"run", meta_json(meta)},
	        {"params", params_json(s.params)},
	        {"m_min", s.m_min},
	        {"m_max", s.m_max},
	        {"north", s.north.eigenvalues},
	        {"south", s.south.eigenvalues},
	        {"dirac", {{"allowed", s.dirac.allowed}, {"n", s.dirac.n}, {"defect", s.dirac.defect},
	                   {"spectra_coincide", s.dirac.spectra_coincide}}},
	        {"flux_quantum", phi0},
	        {"flux", std::move(flux)}};
}

}  // namespace mono
