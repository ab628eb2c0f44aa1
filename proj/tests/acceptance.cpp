// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance [path/to/monopole-algebra]
// The tooling criterion is reported as FAIL when the CLI path is missing.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mono/algebra_checks.hpp"
#include "mono/holonomy.hpp"
#include "mono/quantization.hpp"

using namespace mono;
namespace fs = std::filesystem;

namespace
{

struct Verdict
{
	bool pass = true;
	std::string detail;

	void require(bool ok, const std::string& what)
	{
		if (!ok)
		{
			pass = false;
			detail += (detail.empty() ? "" : "; ") + what;
		}
	}
};

std::string sci(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.2e", v);
	return buf;
}

/// Largest residual of a suite run; failing entries are noted on the verdict.
double suite_max(const SuiteReport& s, Verdict& v, double bound)
{
	double worst = 0.0;
	for (const auto& e : s.entries)
	{
		if (!e.result.pass)
			v.require(false, s.name + ": '" + e.label + "' failed (" + sci(e.result.max_abs_residual) + ")" +
			                     (e.error.empty() ? "" : " " + e.error));
		worst = std::max(worst, e.result.max_abs_residual);
	}
	v.require(!s.entries.empty(), s.name + " has no entries");
	v.require(worst <= bound, s.name + " residual " + sci(worst) + " > " + sci(bound));
	return worst;
}

SuiteReport run(const std::string& name) { return run_suite(*find_suite(name)); }

Verdict gradient_decomposition()
{
	Verdict v;
	const RunOptions o;
	v.require(o.grid.n_theta == 20 && o.grid.n_phi == 40 && o.grid.theta_margin == 0.15, "default grid is not 20x40, 0.15");
	const double a = suite_max(run("radial_part"), v, 1e-10);
	const double b = suite_max(run("decomposition"), v, 1e-10);
	v.detail = "max residual " + sci(std::max(a, b)) + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict transversality()
{
	Verdict v;
	const auto s = run("transversality");
	const double worst = suite_max(s, v, 1e-10);
	std::set<std::pair<double, std::string>> seen;
	for (const auto& e : s.entries)
		seen.insert({e.mu_over_hbar, e.gauge});
	v.require(seen.size() == 8, "sweep does not cover 4 couplings x 2 gauges");
	// The ungauged form, A = 0.
	const OperatorSet flat(PhysicalParams{}.with_mu(0.0), {});
	const auto r = operator_equal(symmetric_dot({radial_unit(0), radial_unit(1), radial_unit(2)}, flat.vec("P_perp")),
	                              FirstOrderOperator::zero(), make_grid(GridSpec{}), 1e-10);
	v.require(r.pass, "e_r.P + P.e_r residual " + sci(r.max_abs_residual));
	v.detail = "max residual " + sci(std::max(worst, r.max_abs_residual)) + " over " + std::to_string(seen.size()) +
	           " sweep points" + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict r2_commutants()
{
	Verdict v;
	const double worst = suite_max(run("r2_commutants"), v, 1e-12);
	v.detail = "max residual " + sci(worst) + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict so3()
{
	Verdict v;
	double worst = suite_max(run("so3_no_monopole"), v, 1e-9);
	// (L(A) x L(A))_k == i hbar L_k(A) written as a cross product, whole sweep.
	for (const auto& sp : default_sweep())
	{
		const OperatorSet ops(sp.params, sp.gauge);
		const auto l = ops.vec("L");
		const auto c = cross(l, l);
		GridSpec g;
		g.domain = sp.gauge.domain();
		const Grid grid = make_grid(g);
		for (std::size_t k = 0; k < 3; ++k)
		{
			const auto r = operator_equal(c[k], Complex(0.0, sp.params.hbar) * l[k], grid, 1e-9);
			worst = std::max(worst, r.max_abs_residual);
			v.require(r.pass, "component " + std::to_string(k) + " at mu/hbar=" + std::to_string(sp.params.mu()) + " " +
			                      to_string(sp.gauge.which));
		}
	}
	v.detail = "max residual " + sci(worst) + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict so31()
{
	Verdict v;
	const auto flat = run("so31_flat");
	const auto mono = run("so31_monopole");
	double worst = std::max(suite_max(flat, v, 1e-9), suite_max(mono, v, 1e-9));
	std::set<std::string> labels;
	for (const auto& e : mono.entries)
		labels.insert(e.label);
	v.require(labels.size() == 15, std::to_string(labels.size()) + " distinct commutators, expected 15");

	// Jacobi and antisymmetry on the constructed operators.
	const PhysicalParams p = PhysicalParams{}.with_mu(0.5);
	for (Gauge g : {Gauge::North, Gauge::South})
	{
		const OperatorSet ops(p, {g});
		GridSpec gs;
		gs.n_theta = 8;
		gs.n_phi = 8;
		gs.domain = ops.gauge().domain();
		const Grid grid = make_grid(gs);
		const std::vector<std::string> names{"L_x", "L_y", "L_z", "Pi_x", "Pi_y", "Pi_z"};
		for (std::size_t a = 0; a < names.size(); ++a)
			for (std::size_t b = a + 1; b < names.size(); ++b)
			{
				const auto& x = ops.get(names[a]);
				const auto& y = ops.get(names[b]);
				const auto anti = operator_equal(commutator(x, y) + commutator(y, x), FirstOrderOperator::zero(), grid, 1e-13);
				v.require(anti.pass, "antisymmetry " + names[a] + "," + names[b]);
				for (std::size_t c = b + 1; c < names.size(); ++c)
				{
					const auto& z = ops.get(names[c]);
					const auto jac = operator_equal(
					    commutator(commutator(x, y), z) + commutator(commutator(y, z), x) + commutator(commutator(z, x), y),
					    FirstOrderOperator::zero(), grid, 1e-9);
					worst = std::max(worst, jac.max_abs_residual);
					v.require(jac.pass, "Jacobi " + names[a] + "," + names[b] + "," + names[c] + " " + sci(jac.max_abs_residual));
				}
			}
	}
	v.detail = std::to_string(labels.size()) + " commutators, max residual " + sci(worst) + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict commutator_oracle()
{
	Verdict v;
	const auto s = run("commutator_oracle");
	const double worst = suite_max(s, v, 1e-9);
	const auto functions = test_function_catalog().size();
	v.require(functions >= 7, "catalog has " + std::to_string(functions) + " functions");
	for (const auto& e : s.entries)
		v.require(e.result.grid_size >= 50, "'" + e.label + "' used " + std::to_string(e.result.grid_size) + " points");
	v.detail = std::to_string(functions) + " functions x 50 points, max residual " + sci(worst) +
	           (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict field_gauge()
{
	Verdict v;
	double worst = suite_max(run("monopole_field"), v, 1e-9);
	worst = std::max(worst, suite_max(run("gauge_covariance"), v, 1e-10));

	// Both patches on the overlap band.
	GridSpec gs;
	gs.domain = GaugeDomain::Overlap;
	const Grid overlap = make_grid(gs);
	std::size_t used = 0;
	const PhysicalParams p;
	for (Gauge g : {Gauge::North, Gauge::South})
	{
		const auto b = radial_field_strength(p, {g});
		for (std::size_t k = 0; k < overlap.points.size() && k < 50; ++k)
		{
			const JetContext c{overlap.points[k], 0, Chart::Spatial};
			const double d = std::abs(b(c).value() - monopole_field(p)(c).value());
			worst = std::max(worst, d);
			v.require(d <= 1e-9, "curl A at overlap point " + std::to_string(k));
			++used;
		}
	}
	v.require(used >= 100, "fewer than 50 overlap points");
	v.detail = "max residual " + sci(worst) + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict gido()
{
	Verdict v;
	ScanConfig cfg;
	cfg.params = PhysicalParams{}.with_mu(0.5);
	v.require(cfg.params.r == 1.0 && cfg.delta_z.front() == 1e-2 && cfg.delta_z.back() == 1e-5, "scan defaults changed");
	const ScanResult r = convergence_scan(cfg);
	v.require(r.slope >= 1.4, "slope " + std::to_string(r.slope));
	v.require(r.extrapolated_error <= 1e-4, "extrapolated error " + sci(r.extrapolated_error));

	ScanConfig flat = cfg;
	flat.params = PhysicalParams{}.with_mu(0.0);
	double phase0 = 0.0;
	for (const auto& row : convergence_scan(flat).rows)
		phase0 = std::max(phase0, std::abs(row.extracted_phase));
	v.require(phase0 <= 1e-12, "mu = 0 phase " + sci(phase0));
	char buf[160];
	std::snprintf(buf, sizeof buf, "slope %.3f, phase/dOmega -> %.8f (error %.2e), mu=0 phase %.1e", r.slope,
	              r.extrapolated_ratio, r.extrapolated_error, phase0);
	v.detail = buf + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict dirac()
{
	Verdict v;
	suite_max(run("quantization"), v, 1.0);
	int allowed = 0;
	for (int k = 0; k <= 20; ++k)
	{
		const double mu = 0.1 * k;
		const bool integer = k % 5 == 0;
		const bool coincide = spectra_coincide(PhysicalParams{}.with_mu(mu));
		v.require(coincide == integer, "mu/hbar = " + std::to_string(mu));
		allowed += coincide ? 1 : 0;
	}
	const auto half = dirac_check(0.5);
	v.require(half.allowed && half.n == 1, "mu = hbar/2 not allowed with n = 1");
	const auto bad = dirac_check(0.3);
	v.require(!bad.allowed && std::abs(bad.defect - 0.4) <= 1e-12, "mu = 0.3 hbar verdict");
	v.detail = std::to_string(allowed) + " of 21 couplings allowed; mu=0.3 defect " + std::to_string(bad.defect) +
	           (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

Verdict flux()
{
	Verdict v;
	double worst_flux = 0.0, worst_ab = 0.0;
	const PhysicalParams base;
	for (int m = -3; m <= 3; ++m)
	{
		const PhysicalParams p = base.with_mu(0.5 * m);
		const double phi0 = flux_quantum(p);
		worst_flux = std::max(worst_flux, std::abs(quantized_flux(p, m, 4 * kPi) - m * phi0));
		worst_flux = std::max(worst_flux, std::abs(4 * kPi * p.g - m * phi0));
		for (int k = 0; k <= 16; ++k)
		{
			const double omega = 4 * kPi * k / 16.0;
			const double a = p.mu() * omega / p.hbar;
			worst_ab = std::max(worst_ab, std::abs(a - ab_phase_from_flux(p, omega)) / std::max(1.0, std::abs(a)));
			try
			{
				ab_phase(p, omega);
			}
			catch (const std::logic_error&)
			{
				v.require(false, "ab_phase routes disagree");
			}
		}
	}
	v.require(worst_flux <= 1e-12, "flux residual " + sci(worst_flux));
	v.require(worst_ab <= 1e-13, "AB residual " + sci(worst_ab));
	const auto s = run("quantization");
	for (const auto& e : s.entries)
		v.require(e.result.pass, "'" + e.label + "' failed");
	v.detail = "flux residual " + sci(worst_flux) + ", AB dual route " + sci(worst_ab) + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

int run_cli(const std::string& exe, const std::string& args)
{
	const std::string cmd = "\"" + exe + "\" " + args + " > /dev/null 2>&1";
	const int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
	std::ifstream in(p, std::ios::binary);
	std::stringstream s;
	s << in.rdbuf();
	return s.str();
}

Verdict tooling(const std::string& exe)
{
	Verdict v;
	if (exe.empty() || !fs::exists(exe))
	{
		v.require(false, "CLI path not given or missing");
		return v;
	}
	const fs::path dir = fs::temp_directory_path() / ("monopole-acceptance-" + std::to_string(::getpid()));
	fs::create_directories(dir);
	const std::string a = (dir / "a").string(), b = (dir / "b").string(), m = (dir / "m").string();

	v.require(run_cli(exe, "verify --seed 7 --format json --out \"" + a + "\"") == 0, "verify did not exit 0");
	v.require(run_cli(exe, "verify --seed 7 --format json --out \"" + b + "\"") == 0, "second verify did not exit 0");
	const std::string ja = slurp(fs::path(a) / "report.json"), jb = slurp(fs::path(b) / "report.json");
	v.require(!ja.empty() && ja == jb, "reports differ between identical runs");

	const int code = run_cli(exe, "verify --seed 7 --format json --perturb Pi_x:polar:1e-3 --out \"" + m + "\"");
	v.require(code == 1, "perturbed verify exit code " + std::to_string(code));
	int failed_suites = 0;
	try
	{
		const auto j = nlohmann::json::parse(slurp(fs::path(m) / "report.json"));
		for (const auto& s : j["suites"])
			failed_suites += s["pass"].get<bool>() ? 0 : 1;
	}
	catch (const std::exception& e)
	{
		v.require(false, std::string("perturbed report unreadable: ") + e.what());
	}
	v.require(failed_suites >= 1, "perturbation failed no suite");
	fs::remove_all(dir);
	v.detail = "exit 0, byte-identical reports (" + std::to_string(ja.size()) + " bytes), perturbation fails " +
	           std::to_string(failed_suites) + " suites" + (v.detail.empty() ? "" : "; " + v.detail);
	return v;
}

}  // namespace

int main(int argc, char** argv)
{
	const std::string exe = argc > 1 ? argv[1] : "";
	const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
	    {"gradient decomposition", gradient_decomposition},
	    {"transversality", transversality},
	    {"r^2 commutants", r2_commutants},
	    {"so(3) with monopole", so3},
	    {"so(3,1) closure, Jacobi, antisymmetry", so31},
	    {"commutator oracle equivalence", commutator_oracle},
	    {"field and gauge consistency", field_gauge},
	    {"loop phase convergence", gido},
	    {"Dirac condition", dirac},
	    {"flux quantization and AB phase", flux},
	    {"tooling", [&] { return tooling(exe); }},
	};
	int failures = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i)
	{
		const auto t0 = std::chrono::steady_clock::now();
		Verdict v;
		try
		{
			v = criteria[i].second();
		}
		catch (const std::exception& e)
		{
			v.pass = false;
			v.detail = std::string("exception: ") + e.what();
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		std::printf("%s [%zu] %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str(),
		            secs);
		std::fflush(stdout);
		failures += v.pass ? 0 : 1;
	}
	std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
	return failures == 0 ? 0 : 1;
}
