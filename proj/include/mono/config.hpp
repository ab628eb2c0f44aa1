#ifndef MONO_CONFIG_HPP
#define MONO_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mono/algebra_checks.hpp"
#include "mono/holonomy.hpp"

namespace mono
{

/// Bad config file, flag value or suite name. The CLI maps it to exit 2.
class ConfigError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Everything a CLI run needs. Only fields the user actually set are
/// engaged, so layers can be merged: flags over file over defaults.
struct RunConfig
{
	std::vector<std::string> suites;  // empty or {"all"}: every builtin suite
	std::optional<double> hbar, c, q, g, r, mu;
	std::optional<Gauge> gauge;
	std::optional<double> overlap_halfwidth;
	std::optional<int> n_theta, n_phi;
	std::optional<double> theta_margin;
	std::optional<bool> jitter;
	std::optional<std::vector<double>> delta_z;
	std::optional<int> series_order;
	std::optional<double> scan_theta;
	std::optional<double> min_slope;
	std::optional<double> phase_tolerance;
	std::optional<int> m_min, m_max;
	std::optional<std::string> out;
	std::optional<std::set<std::string>> formats;
	std::optional<std::uint64_t> seed;
	std::optional<double> tolerance;

	/// Fields engaged in `over` replace those here.
	void merge(const RunConfig& over);
};

/// Line-based format:
///   # comment
///   [run]       suites, seed, tolerance, out, formats
///   [params]    hbar, c, q, g, r, mu, gauge, overlap_halfwidth
///   [grid]      n_theta, n_phi, margin, jitter
///   [scan]      delta_z (comma list), series_order, theta, min_slope, phase_tolerance
///   [spectrum]  m_min, m_max
/// Unknown sections or keys are errors.
RunConfig parse_config(const std::string& text, const std::string& origin = "config");
RunConfig load_config(const std::string& path);

Gauge parse_gauge(const std::string& s);
std::uint64_t parse_seed(const std::string& s);

/// Seed from MONOPOLE_ALGEBRA_SEED when set, else empty.
std::optional<std::uint64_t> seed_from_environment();

/// Resolved values used by the commands.
struct ResolvedConfig
{
	std::vector<IdentitySuite> suites;
	PhysicalParams params;
	GaugeChoice gauge;
	bool params_overridden = false;  // any of hbar, c, q, g, r, mu, gauge set
	bool gauge_given = false;
	bool mu_given = false;
	GridSpec grid;
	ScanConfig scan;
	double min_slope = 1.4;
	double phase_tolerance = 1e-4;
	int m_min = -3;
	int m_max = 3;
	std::string out = ".";
	std::set<std::string> formats;
	std::uint64_t seed = kDefaultSeed;
	std::optional<double> tolerance;

	RunOptions run_options() const;
};

/// Validates suite names and values before any computation happens.
/// `default_formats` applies when the config names none.
ResolvedConfig resolve(const RunConfig& config, const std::set<std::string>& default_formats);

}  // namespace mono

#endif
