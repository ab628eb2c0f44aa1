#ifndef MONO_QUANTIZATION_HPP
#define MONO_QUANTIZATION_HPP

#include <vector>

#include "mono/monopole.hpp"

namespace mono
{

/// L_z(A) eigenvalues m hbar -+ mu for integer m in [m_min, m_max].
struct SpectrumWindow
{
	int m_min = 0;
	int m_max = 0;
	GaugeChoice gauge;
	PhysicalParams params;
	std::vector<double> eigenvalues;
	/// max |L_z(A) e^{i m phi} / e^{i m phi} - eigenvalue| over the probe points
	double operator_residual = 0.0;
};

inline constexpr double kSpectrumTolerance = 1e-12;

/// Analytic eigenvalues, cross-validated by applying the constructed L_z(A)
/// to e^{i m phi} at 10 points of the gauge patch. Throws std::runtime_error
/// when the two disagree beyond kSpectrumTolerance.
SpectrumWindow lz_spectrum(const PhysicalParams& p, const GaugeChoice& gauge, int m_min, int m_max);

/// Whether the north and south eigenvalue lattices agree as sets on a window
/// that extends 2 + ceil(|mu|/hbar) quanta past the compared range.
bool spectra_coincide(const PhysicalParams& p, double tolerance = 1e-10);

struct DiracVerdict
{
	bool allowed = false;
	long n = 0;           // nearest integer to 2 mu / hbar
	double defect = 0.0;  // |2 mu / hbar - n|
	bool spectra_coincide = false;
};

inline constexpr double kDiracTolerance = 1e-10;

/// mu = n hbar / 2 test. Throws std::logic_error if the arithmetic verdict and
/// the spectral verdict disagree.
DiracVerdict dirac_check(double mu, double hbar = 1.0);

/// mu dOmega / hbar. The flux route (q / hbar c) g dS / r^2 with
/// dS = r^2 dOmega is computed alongside; std::logic_error if they differ by
/// more than 1e-13 relative.
double ab_phase(const PhysicalParams& p, double delta_omega);

/// (q / hbar c) (g dS / r^2), the flux route alone.
double ab_phase_from_flux(const PhysicalParams& p, double delta_omega);

/// phi_0 = h c / q = 2 pi hbar c / q.
double flux_quantum(const PhysicalParams& p);

/// m phi_0 dOmega / (4 pi).
double quantized_flux(const PhysicalParams& p, int m, double delta_omega);

}  // namespace mono

#endif
