#ifndef MONO_REPORT_HPP
#define MONO_REPORT_HPP

#include <string>

#include <json.hpp>

#include "mono/algebra_checks.hpp"
#include "mono/holonomy.hpp"
#include "mono/quantization.hpp"

namespace mono
{

/// What produced a report; echoed into the JSON so a report can be rerun.
struct RunMeta
{
	std::string command = "verify";
	std::uint64_t seed = kDefaultSeed;
	std::optional<double> tolerance;
	GridSpec grid;
};

inline constexpr const char* kReportSchemaVersion = "1";

nlohmann::json report_json(const Report& report, const RunMeta& meta);

/// Text report: one line per entry, failures first within each suite.
std::string report_text(const Report& report);

/// Serializes with 2-space indentation and every double printed with 17
/// significant digits. Non-finite numbers become null.
std::string dump_json(const nlohmann::json& j);

/// %.17g, the numeric format of every machine-readable output.
std::string format_number(double v);

/// Header, one row per delta_z, then a footer row starting with "slope".
std::string scan_csv(const ScanResult& scan);
std::string scan_text(const ScanResult& scan, double min_slope, double phase_tolerance);
nlohmann::json scan_json(const ScanResult& scan, const RunMeta& meta);

struct SpectrumReport
{
	PhysicalParams params;
	SpectrumWindow north;
	SpectrumWindow south;
	DiracVerdict dirac;
	int m_min = 0;
	int m_max = 0;
};

SpectrumReport spectrum_report(const PhysicalParams& p, int m_min, int m_max, double overlap_halfwidth = kDefaultOverlapHalfwidth);
std::string spectrum_text(const SpectrumReport& s);
nlohmann::json spectrum_json(const SpectrumReport& s, const RunMeta& meta);

}  // namespace mono

#endif
