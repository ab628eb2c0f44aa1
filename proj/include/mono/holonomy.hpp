#ifndef MONO_HOLONOMY_HPP
#define MONO_HOLONOMY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mono/monopole.hpp"

namespace mono
{

/// A truncated exponential series whose terms stopped shrinking.
class SeriesDivergence : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSeriesOrder = 8;

/// A truncated series whose last kept term exceeds this fraction of the sum
/// is rejected.
inline constexpr double kSeriesTailLimit = 1e-3;

/// Scan points sit on this ring around the pole. Nearer the pole the
/// 1/sin(theta) coefficients shrink the Taylor radius below the loop size at
/// delta_z = 1e-2.
inline constexpr double kScanThetaMargin = 0.5;

struct ExpApplyResult
{
	Complex value;
	/// |last kept term| / |sum|, the convergence monitor
	double last_term_ratio = 0.0;
};

/// sum_{n<=K} t^n/n! (O^n f)(p). f is expanded to order K + 1 on the given
/// chart. Throws SeriesDivergence when term K is larger than terms K - 1 and
/// K - 2, or larger than kSeriesTailLimit times the sum.
ExpApplyResult exp_apply(const FirstOrderOperator& o, Complex t, const TestFunction& f, const SpherePoint& p,
                         int series_order = kDefaultSeriesOrder, Chart chart = Chart::Surface);

/// Jet-level series: coefficients must reach order g.order() - 1; the result
/// has order g.order() - series_order.
Jet exp_series(const OperatorCoefficients& o, Complex t, const Jet& g, int series_order, double* last_term_ratio = nullptr);

/// Unit vectors spanning the loop plane and its normal (the loop's pole).
struct LoopFrame
{
	Vec3 u{1.0, 0.0, 0.0};
	Vec3 v{0.0, 1.0, 0.0};
	Vec3 w{0.0, 0.0, 1.0};
};

/// Frame whose w axis points at (theta, phi); u along e_theta, v along e_phi there.
LoopFrame rotated_frame(double theta, double phi);

enum class Orientation
{
	Forward,
	Reverse  // alpha -> -alpha, the loop traversed the other way
};

struct LoopSpec
{
	double delta_z = 1e-4;  // plane offset below the pole
	int series_order = kDefaultSeriesOrder;
	PhysicalParams params;
	GaugeChoice gauge;
	LoopFrame frame;
	Orientation orientation = Orientation::Forward;

	/// sqrt(r dz - dz^2 / 2); throws std::invalid_argument unless 0 < dz < r.
	double alpha() const;
	double beta() const { return alpha(); }
	/// alpha beta / r^2
	double delta_omega() const;
};

struct HolonomyEntry
{
	std::string function_id;
	SpherePoint point;
	Complex initial;    // f(p)
	Complex measured;   // (G f)(p)
	Complex predicted;  // (exp(-i dOmega L_w(A) / hbar) f)(p)
	double delta_omega = 0.0;
	double residual = 0.0;  // |measured - predicted|
	double phase = 0.0;     // arg(measured / f(p))
	double last_term_ratio = 0.0;
};

/// G = e^{Y} e^{X} e^{-Y} e^{-X} f with X = i alpha Pi_u(A)/hbar,
/// Y = i beta Pi_v(A)/hbar, applied right to left.
HolonomyEntry gido_loop(const LoopSpec& spec, const TestFunction& f, const SpherePoint& p);

/// (G^{-1} G f)(p) - f(p) with G^{-1} = e^{X} e^{Y} e^{-X} e^{-Y}.
double group_inverse_residual(const LoopSpec& spec, const TestFunction& f, const SpherePoint& p);

/// Points with theta in [margin, 0.5], the loop's neighbourhood of the pole.
std::vector<SpherePoint> pole_points(int n_theta = 3, int n_phi = 4, double margin = kDefaultThetaMargin, double r = 1.0);

struct ScanRow
{
	double delta_z = 0.0;
	double delta_omega = 0.0;
	double max_residual = 0.0;
	double extracted_phase = 0.0;  // from f = 1 at the phase point
	double predicted_phase = 0.0;  // mu dOmega / hbar
	double phase_error = 0.0;      // |extracted / dOmega - mu / hbar|
	double ab_phase_flux = 0.0;    // (q / hbar c) g dS / r^2
};

struct ScanResult
{
	std::vector<ScanRow> rows;
	double slope = 0.0;  // least squares, log residual against log dOmega
	/// extracted / dOmega extrapolated to dOmega -> 0 from the two smallest rows,
	/// leading correction taken proportional to dOmega^(slope - 1)
	double extrapolated_ratio = 0.0;
	double extrapolated_error = 0.0;  // |extrapolated_ratio - mu / hbar|
	std::vector<std::string> warnings;
};

struct ScanConfig
{
	std::vector<double> delta_z{1e-2, 1e-3, 1e-4, 1e-5};
	int series_order = kDefaultSeriesOrder;
	PhysicalParams params;
	GaugeChoice gauge;
	LoopFrame frame;
	std::vector<TestFunction> functions;  // empty: the seeded catalog
	std::vector<SpherePoint> points;      // empty: pole_points(1, 4, kScanThetaMargin)
	std::optional<SpherePoint> phase_point;  // empty: theta = kScanThetaMargin, phi = 0; the pole itself for rotated frames
	std::uint64_t seed = kDefaultSeed;
	unsigned threads = 0;  // 0: hardware concurrency
};

/// Requires at least 4 delta_z values spanning 2 decades.
ScanResult convergence_scan(const ScanConfig& config);

/// The three alternative poles used for the rotated-frame rerun.
std::vector<LoopFrame> alternative_poles();

/// Point at polar angle theta from the frame's pole, azimuth phi around it.
SpherePoint point_near_pole(const LoopFrame& frame, double theta, double phi, double r = 1.0);

}  // namespace mono

#endif
