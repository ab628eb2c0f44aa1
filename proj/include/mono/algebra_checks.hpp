#ifndef MONO_ALGEBRA_CHECKS_HPP
#define MONO_ALGEBRA_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mono/monopole.hpp"

namespace mono
{

struct SweepPoint
{
	PhysicalParams params;
	GaugeChoice gauge;
};

/// Which grid an identity is checked on.
enum class GridPolicy
{
	GaugePatch,  // domain of the sweep point's gauge
	Overlap,
	Full
};

struct CheckContext
{
	const SweepPoint& sweep;
	const OperatorSet& ops;
	const Grid& grid;
	double tolerance;
	std::uint64_t seed;
};

struct Identity
{
	std::string label;
	std::string paper_eq;
	double tolerance = kDefaultIdentityTolerance;
	GridPolicy grid = GridPolicy::GaugePatch;
	std::function<OperatorIdentityReport(const CheckContext&)> check;
};

/// lhs == rhs as operators on the context grid.
Identity operator_identity(std::string label, std::string paper_eq, double tolerance, GridPolicy grid,
                           std::function<FirstOrderOperator(const OperatorSet&)> lhs,
                           std::function<FirstOrderOperator(const OperatorSet&)> rhs);

struct IdentitySuite
{
	std::string name;
	std::string description;
	std::vector<Identity> identities;
	std::vector<SweepPoint> params_sweep;
};

struct RunOptions
{
	GridSpec grid;  // domain is overridden per identity
	std::optional<double> tolerance;
	std::optional<Perturbation> perturbation;
	std::optional<std::vector<SweepPoint>> sweep;  // replaces every suite's own sweep
	std::uint64_t seed = kDefaultSeed;
};

struct ReportEntry
{
	std::string label;
	std::string paper_eq;
	double mu_over_hbar = 0.0;
	std::string gauge;
	OperatorIdentityReport result;
	std::string error;  // builder failure, empty on success
};

struct SuiteReport
{
	std::string name;
	std::vector<ReportEntry> entries;  // sorted by (label, gauge, mu)
	bool pass = false;
};

struct Report
{
	std::vector<SuiteReport> suites;
	bool pass = false;
};

/// mu/hbar in {0, 1/2, 1, 3/2} times both gauges, default units.
std::vector<SweepPoint> default_sweep();

SuiteReport run_suite(const IdentitySuite& suite, const RunOptions& options = {});
Report run_suites(const std::vector<IdentitySuite>& suites, const RunOptions& options = {});

std::vector<IdentitySuite> builtin_suites();
std::optional<IdentitySuite> find_suite(const std::string& name);

/// Closed-form commutator against O1(O2 f) - O2(O1 f) for every catalog
/// function at the given points; returns the largest deviation.
double commutator_oracle_residual(const FirstOrderOperator& a, const FirstOrderOperator& b,
                                  const std::vector<TestFunction>& functions, const std::vector<SpherePoint>& points);

}  // namespace mono

#endif
