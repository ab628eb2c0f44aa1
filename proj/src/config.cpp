#include "mono/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mono
{

namespace
{

std::string trim(const std::string& s)
{
	const auto b = s.find_first_not_of(" \t\r");
	if (b == std::string::npos)
		return {};
	const auto e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s)
{
	std::vector<std::string> out;
	std::stringstream in(s);
	std::string item;
	while (std::getline(in, item, ','))
	{
		item = trim(item);
		if (!item.empty())
			out.push_back(item);
	}
	return out;
}

double parse_double(const std::string& s, const std::string& where)
{
	const std::string t = trim(s);
	char* end = nullptr;
	const double v = std::strtod(t.c_str(), &end);
	if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v))
		throw ConfigError(where + ": not a finite number: '" + s + "'");
	return v;
}

int parse_int(const std::string& s, const std::string& where)
{
	const std::string t = trim(s);
	int v = 0;
	const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
	if (t.empty() || ec != std::errc() || p != t.data() + t.size())
		throw ConfigError(where + ": not an integer: '" + s + "'");
	return v;
}

bool parse_bool(const std::string& s, const std::string& where)
{
	std::string t = trim(s);
	std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
	if (t == "true" || t == "yes" || t == "1" || t == "on")
		return true;
	if (t == "false" || t == "no" || t == "0" || t == "off")
		return false;
	throw ConfigError(where + ": not a boolean: '" + s + "'");
}

const std::set<std::string> kFormats{"json", "csv", "text"};

}  // namespace

Gauge parse_gauge(const std::string& s)
{
	const std::string t = trim(s);
	if (t == "north")
		return Gauge::North;
	if (t == "south")
		return Gauge::South;
	throw ConfigError("gauge must be north or south, got '" + s + "'");
}

std::uint64_t parse_seed(const std::string& s)
{
	const std::string t = trim(s);
	std::uint64_t v = 0;
	const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
	if (t.empty() || ec != std::errc() || p != t.data() + t.size())
		throw ConfigError("seed must be a non-negative integer, got '" + s + "'");
	return v;
}

std::optional<std::uint64_t> seed_from_environment()
{
	const char* v = std::getenv("MONOPOLE_ALGEBRA_SEED");
	if (!v || !*v)
		return std::nullopt;
	try
	{
		return parse_seed(v);
	}
	catch (const ConfigError& e)
	{
		throw ConfigError(std::string("MONOPOLE_ALGEBRA_SEED: ") + e.what());
	}
}

void RunConfig::merge(const RunConfig& o)
{
	if (!o.suites.empty())
		suites = o.suites;
	auto take = [](auto& mine, const auto& theirs) {
		if (theirs)
			mine = theirs;
	};
	take(hbar, o.hbar);
	take(c, o.c);
	take(q, o.q);
	take(g, o.g);
	take(r, o.r);
	take(mu, o.mu);
	take(gauge, o.gauge);
	take(overlap_halfwidth, o.overlap_halfwidth);
	take(n_theta, o.n_theta);
	take(n_phi, o.n_phi);
	take(theta_margin, o.theta_margin);
	take(jitter, o.jitter);
	take(delta_z, o.delta_z);
	take(series_order, o.series_order);
	take(scan_theta, o.scan_theta);
	take(min_slope, o.min_slope);
	take(phase_tolerance, o.phase_tolerance);
	take(m_min, o.m_min);
	take(m_max, o.m_max);
	take(out, o.out);
	take(formats, o.formats);
	take(seed, o.seed);
	take(tolerance, o.tolerance);
}

RunConfig parse_config(const std::string& text, const std::string& origin)
{
	RunConfig cfg;
	std::istringstream in(text);
	std::string raw, section;
	int line_no = 0;
	while (std::getline(in, raw))
	{
		++line_no;
		const std::string where = origin + ":" + std::to_string(line_no);
		std::string line = raw;
		if (const auto hash = line.find_first_of("#;"); hash != std::string::npos)
			line = line.substr(0, hash);
		line = trim(line);
		if (line.empty())
			continue;
		if (line.front() == '[')
		{
			if (line.back() != ']')
				throw ConfigError(where + ": unterminated section header");
			section = trim(line.substr(1, line.size() - 2));
			if (section != "run" && section != "params" && section != "grid" && section != "scan" && section != "spectrum")
				throw ConfigError(where + ": unknown section [" + section + "]");
			continue;
		}
		const auto eq = line.find('=');
		if (eq == std::string::npos)
			throw ConfigError(where + ": expected key = value");
		const std::string key = trim(line.substr(0, eq));
		const std::string value = trim(line.substr(eq + 1));
		if (section.empty())
			throw ConfigError(where + ": key '" + key + "' outside any section");

		const std::string full = section + "." + key;
		if (full == "run.suites")
			cfg.suites = split_list(value);
		else if (full == "run.seed")
			cfg.seed = parse_seed(value);
		else if (full == "run.tolerance")
			cfg.tolerance = parse_double(value, where);
		else if (full == "run.out")
			cfg.out = value;
		else if (full == "run.formats")
		{
			const auto items = split_list(value);
			cfg.formats = std::set<std::string>(items.begin(), items.end());
		}
		else if (full == "params.hbar")
			cfg.hbar = parse_double(value, where);
		else if (full == "params.c")
			cfg.c = parse_double(value, where);
		else if (full == "params.q")
			cfg.q = parse_double(value, where);
		else if (full == "params.g")
			cfg.g = parse_double(value, where);
		else if (full == "params.r")
			cfg.r = parse_double(value, where);
		else if (full == "params.mu")
			cfg.mu = parse_double(value, where);
		else if (full == "params.gauge")
			cfg.gauge = parse_gauge(value);
		else if (full == "params.overlap_halfwidth")
			cfg.overlap_halfwidth = parse_double(value, where);
		else if (full == "grid.n_theta")
			cfg.n_theta = parse_int(value, where);
		else if (full == "grid.n_phi")
			cfg.n_phi = parse_int(value, where);
		else if (full == "grid.margin")
			cfg.theta_margin = parse_double(value, where);
		else if (full == "grid.jitter")
			cfg.jitter = parse_bool(value, where);
		else if (full == "scan.delta_z")
		{
			std::vector<double> dz;
			for (const auto& item : split_list(value))
				dz.push_back(parse_double(item, where));
			cfg.delta_z = dz;
		}
		else if (full == "scan.series_order")
			cfg.series_order = parse_int(value, where);
		else if (full == "scan.theta")
			cfg.scan_theta = parse_double(value, where);
		else if (full == "scan.min_slope")
			cfg.min_slope = parse_double(value, where);
		else if (full == "scan.phase_tolerance")
			cfg.phase_tolerance = parse_double(value, where);
		else if (full == "spectrum.m_min")
			cfg.m_min = parse_int(value, where);
		else if (full == "spectrum.m_max")
			cfg.m_max = parse_int(value, where);
		else
			throw ConfigError(where + ": unknown key '" + key + "' in [" + section + "]");
	}
	return cfg;
}

RunConfig load_config(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw ConfigError("cannot read config file '" + path + "'");
	std::stringstream buf;
	buf << in.rdbuf();
	return parse_config(buf.str(), path);
}

RunOptions ResolvedConfig::run_options() const
{
	RunOptions o;
	o.grid = grid;
	o.tolerance = tolerance;
	o.seed = seed;
	if (params_overridden)
	{
		std::vector<double> mus;
		if (mu_given)
			mus.push_back(params.mu());
		else
			for (double k : {0.0, 0.5, 1.0, 1.5})
				mus.push_back(k * params.hbar);
		std::vector<Gauge> gauges = gauge_given ? std::vector<Gauge>{gauge.which} : std::vector<Gauge>{Gauge::North, Gauge::South};
		std::vector<SweepPoint> sweep;
		for (Gauge g : gauges)
			for (double m : mus)
				sweep.push_back({params.with_mu(m), {g, gauge.overlap_halfwidth}});
		o.sweep = sweep;
	}
	return o;
}

ResolvedConfig resolve(const RunConfig& cfg, const std::set<std::string>& default_formats)
{
	ResolvedConfig r;

	const bool all = cfg.suites.empty() ||
	                 std::find(cfg.suites.begin(), cfg.suites.end(), std::string("all")) != cfg.suites.end();
	if (all)
		r.suites = builtin_suites();
	else
		for (const auto& name : cfg.suites)
		{
			auto s = find_suite(name);
			if (!s)
				throw ConfigError("unknown suite '" + name + "' (see list-suites)");
			if (std::none_of(r.suites.begin(), r.suites.end(), [&](const IdentitySuite& x) { return x.name == name; }))
				r.suites.push_back(*s);
		}

	PhysicalParams p;
	p.hbar = cfg.hbar.value_or(p.hbar);
	p.c = cfg.c.value_or(p.c);
	p.q = cfg.q.value_or(p.q);
	p.g = cfg.g.value_or(p.g);
	p.r = cfg.r.value_or(p.r);
	try
	{
		p.validate();
		if (cfg.mu)
			p = p.with_mu(*cfg.mu * p.hbar);
	}
	catch (const std::exception& e)
	{
		throw ConfigError(std::string("params: ") + e.what());
	}
	r.params = p;
	r.mu_given = cfg.mu.has_value() || cfg.g.has_value() || cfg.q.has_value() || cfg.c.has_value() || cfg.hbar.has_value();
	r.gauge_given = cfg.gauge.has_value();
	r.gauge.which = cfg.gauge.value_or(Gauge::North);
	r.gauge.overlap_halfwidth = cfg.overlap_halfwidth.value_or(kDefaultOverlapHalfwidth);
	if (!(r.gauge.overlap_halfwidth > 0.0 && r.gauge.overlap_halfwidth < kPi / 2))
		throw ConfigError("params: overlap_halfwidth must lie in (0, pi/2)");
	r.params_overridden = r.mu_given || r.gauge_given || cfg.r.has_value() || cfg.overlap_halfwidth.has_value();

	r.seed = cfg.seed ? *cfg.seed : seed_from_environment().value_or(kDefaultSeed);
	r.tolerance = cfg.tolerance;
	if (r.tolerance && !(*r.tolerance >= 0.0))
		throw ConfigError("tolerance must be non-negative");

	r.grid.n_theta = cfg.n_theta.value_or(r.grid.n_theta);
	r.grid.n_phi = cfg.n_phi.value_or(r.grid.n_phi);
	r.grid.theta_margin = cfg.theta_margin.value_or(r.grid.theta_margin);
	r.grid.radius = p.r;
	if (r.grid.n_theta < 2 || r.grid.n_phi < 2 || !(r.grid.theta_margin > 0.0 && r.grid.theta_margin < kPi / 2))
		throw ConfigError("grid: need n_theta, n_phi >= 2 and margin in (0, pi/2)");
	if (cfg.jitter.value_or(false))
		r.grid.jitter_seed = r.seed;

	r.scan.params = p;
	r.scan.gauge = r.gauge;
	r.scan.seed = r.seed;
	if (cfg.delta_z)
		r.scan.delta_z = *cfg.delta_z;
	r.scan.series_order = cfg.series_order.value_or(kDefaultSeriesOrder);
	if (r.scan.series_order < 4)
		throw ConfigError("scan: series_order must be at least 4");
	for (double dz : r.scan.delta_z)
		if (!(dz > 0.0 && dz < p.r))
			throw ConfigError("scan: delta_z values must lie in (0, r)");
	if (cfg.scan_theta)
	{
		if (!(*cfg.scan_theta > 0.0 && *cfg.scan_theta < kPi))
			throw ConfigError("scan: theta must lie in (0, pi)");
		r.scan.points = pole_points(1, 4, 0.5, p.r);
		for (auto& pt : r.scan.points)
			pt.theta = *cfg.scan_theta;
		r.scan.phase_point = SpherePoint{p.r, *cfg.scan_theta, 0.0};
	}
	r.min_slope = cfg.min_slope.value_or(r.min_slope);
	r.phase_tolerance = cfg.phase_tolerance.value_or(r.phase_tolerance);

	r.m_min = cfg.m_min.value_or(r.m_min);
	r.m_max = cfg.m_max.value_or(r.m_max);
	if (r.m_min > r.m_max)
		throw ConfigError("spectrum: m_min exceeds m_max");

	r.out = cfg.out.value_or(".");
	r.formats = cfg.formats.value_or(default_formats);
	for (const auto& f : r.formats)
		if (!kFormats.count(f))
			throw ConfigError("unknown format '" + f + "' (json, csv, text)");
	return r;
}

}  // namespace mono
