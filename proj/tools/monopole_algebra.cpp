// monopole-algebra: runs the verification suites, holonomy scans and
// spectrum reports. Exit status 0 pass, 1 verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mono/config.hpp"
#include "mono/report.hpp"

namespace fs = std::filesystem;
using namespace mono;

namespace
{

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& dir, const std::string& name, const std::string& content)
{
	fs::create_directories(dir);
	const fs::path path = fs::path(dir) / name;
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw std::runtime_error("cannot write " + path.string());
	out << content;
}

Perturbation parse_perturbation(const std::string& spec)
{
	// NAME[:SLOT[:DELTA]], SLOT one of radial, polar, azimuthal, multiplier
	Perturbation p;
	const auto a = spec.find(':');
	p.target = spec.substr(0, a);
	if (a != std::string::npos)
	{
		const auto b = spec.find(':', a + 1);
		const std::string slot = spec.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1);
		bool found = false;
		for (Slot s : kAllSlots)
			if (slot == to_string(s))
			{
				p.slot = s;
				found = true;
			}
		if (!found)
			throw ConfigError("perturbation slot must be radial, polar, azimuthal or multiplier");
		if (b != std::string::npos)
		{
			try
			{
				p.delta = std::stod(spec.substr(b + 1));
			}
			catch (const std::exception&)
			{
				throw ConfigError("perturbation delta is not a number");
			}
		}
	}
	const auto names = OperatorSet::names();
	if (std::find(names.begin(), names.end(), p.target) == names.end())
		throw ConfigError("unknown operator '" + p.target + "' for --perturb");
	return p;
}

RunMeta meta_for(const std::string& command, const ResolvedConfig& rc)
{
	RunMeta m;
	m.command = command;
	m.seed = rc.seed;
	m.tolerance = rc.tolerance;
	m.grid = rc.grid;
	return m;
}

int cmd_verify(const ResolvedConfig& rc, const std::optional<Perturbation>& perturb)
{
	RunOptions opts = rc.run_options();
	opts.perturbation = perturb;
	const Report report = run_suites(rc.suites, opts);
	const std::string text = report_text(report);
	std::cout << text;
	if (rc.formats.count("json"))
		write_file(rc.out, "report.json", dump_json(report_json(report, meta_for("verify", rc))));
	if (rc.formats.count("text"))
		write_file(rc.out, "report.txt", text);
	return report.pass ? kExitPass : kExitFail;
}

int cmd_scan(const ResolvedConfig& rc)
{
	const ScanResult scan = convergence_scan(rc.scan);
	const std::string text = scan_text(scan, rc.min_slope, rc.phase_tolerance);
	std::cout << text;
	if (rc.formats.count("csv"))
		write_file(rc.out, "scan.csv", scan_csv(scan));
	if (rc.formats.count("json"))
		write_file(rc.out, "report.json", dump_json(scan_json(scan, meta_for("scan", rc))));
	if (rc.formats.count("text"))
		write_file(rc.out, "report.txt", text);
	const bool ok = scan.slope >= rc.min_slope && scan.extrapolated_error <= rc.phase_tolerance;
	std::cout << (ok ? "scan passes\n" : "scan FAILED\n");
	return ok ? kExitPass : kExitFail;
}

int cmd_spectrum(const ResolvedConfig& rc)
{
	const SpectrumReport s = spectrum_report(rc.params, rc.m_min, rc.m_max, rc.gauge.overlap_halfwidth);
	const std::string text = spectrum_text(s);
	std::cout << text;
	if (rc.formats.count("json"))
		write_file(rc.out, "report.json", dump_json(spectrum_json(s, meta_for("spectrum", rc))));
	if (rc.formats.count("text"))
		write_file(rc.out, "report.txt", text);
	return kExitPass;
}

int cmd_list()
{
	for (const auto& s : builtin_suites())
		std::cout << s.name << "  (" << s.identities.size() << " identities)  " << s.description << "\n";
	return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Charge-monopole operator algebra checks"};
	app.require_subcommand(1);
	app.fallthrough();

	std::string config_path;
	std::vector<std::string> suites;
	std::optional<double> mu;
	std::string gauge;
	std::string out;
	std::vector<std::string> formats;
	std::string seed;
	std::optional<double> tolerance;
	std::string perturb;

	app.add_option("--config", config_path, "key=value config file");
	app.add_option("--suite", suites, "suite to run (repeatable, or 'all')");
	app.add_option("--mu", mu, "monopole coupling mu in units of hbar");
	app.add_option("--gauge", gauge, "north or south");
	app.add_option("--out", out, "output directory");
	app.add_option("--format", formats, "json, csv or text (repeatable)");
	app.add_option("--seed", seed, "seed for random test functions and grid jitter");
	app.add_option("--tolerance", tolerance, "override every identity tolerance");
	app.add_option("--perturb", perturb, "NAME[:SLOT[:DELTA]] add DELTA to one coefficient of one operator");

	auto* verify = app.add_subcommand("verify", "run verification suites");
	auto* scan = app.add_subcommand("scan", "holonomy convergence scan");
	auto* spectrum = app.add_subcommand("spectrum", "L_z spectra, Dirac condition and flux quanta");
	auto* list = app.add_subcommand("list-suites", "list builtin suites");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? kExitPass : kExitUsage;
	}

	try
	{
		if (list->parsed())
			return cmd_list();

		RunConfig cfg;
		if (!config_path.empty())
			cfg = load_config(config_path);
		RunConfig flags;
		flags.suites = suites;
		flags.mu = mu;
		if (!gauge.empty())
			flags.gauge = parse_gauge(gauge);
		if (!out.empty())
			flags.out = out;
		if (!formats.empty())
			flags.formats = std::set<std::string>(formats.begin(), formats.end());
		if (!seed.empty())
			flags.seed = parse_seed(seed);
		flags.tolerance = tolerance;
		cfg.merge(flags);

		std::optional<Perturbation> perturbation;
		if (!perturb.empty())
			perturbation = parse_perturbation(perturb);

		if (verify->parsed())
			return cmd_verify(resolve(cfg, {"json", "text"}), perturbation);
		if (scan->parsed())
			return cmd_scan(resolve(cfg, {"csv", "text"}));
		if (spectrum->parsed())
			return cmd_spectrum(resolve(cfg, {"text"}));
	}
	catch (const ConfigError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	catch (const std::exception& e)
	{
		std::cerr << "failure: " << e.what() << "\n";
		return kExitFail;
	}
	return kExitUsage;
}
