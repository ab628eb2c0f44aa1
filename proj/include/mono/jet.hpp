#ifndef MONO_JET_HPP
#define MONO_JET_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mono/point.hpp"

namespace mono
{

/// Exponents of (r, theta, phi). Surface jets always carry a zero r exponent.
using MultiIndex = std::array<int, 3>;

/// Raised when a composition or division is evaluated at a base value where
/// it is singular (e.g. 1/sin(theta) at a pole).
class SingularValue : public std::domain_error
{
public:
	using std::domain_error::domain_error;
};

/// Index tables shared by every jet with the same variable count and order.
/// Coefficients are stored graded by total degree, so the first
/// size(n, k') entries of an order-k jet are its order-k' truncation.
struct JetLayout
{
	int nvars = 0;
	int order = 0;
	std::vector<std::array<int, 3>> exponents;  // local variable order
	std::vector<std::array<int, 3>> raise;      // index of alpha + e_v, or -1
	struct Product
	{
		int lhs, rhs, out;
	};
	std::vector<Product> products;  // all pairs with deg(lhs) + deg(rhs) <= order
	std::vector<std::size_t> product_begin;  // products grouped by lhs

	int index_of(const std::array<int, 3>& local) const;

	static std::size_t size(int nvars, int order);
	static const JetLayout& get(int nvars, int order);
};

/// Truncated multivariate Taylor expansion of a complex function around a
/// SpherePoint, in centred offsets of the chart variables.
class Jet
{
public:
	Jet(Chart chart, int order, const SpherePoint& base);

	static Jet constant(Chart chart, int order, const SpherePoint& base, Complex value);
	static Jet variable(Chart chart, int order, const SpherePoint& base, Coord which);

	Chart chart() const { return chart_; }
	int order() const { return layout_->order; }
	int nvars() const { return layout_->nvars; }
	const SpherePoint& base() const { return base_; }

	std::span<const Complex> coeffs() const { return coeffs_; }
	std::span<Complex> coeffs() { return coeffs_; }

	Complex value() const { return coeffs_[0]; }

	/// Taylor coefficient of the multi-index (zero beyond the order).
	Complex coeff(const MultiIndex& alpha) const;
	void set_coeff(const MultiIndex& alpha, Complex v);

	/// alpha! * coeff(alpha), the mixed partial derivative at the base point.
	Complex derivative(const MultiIndex& alpha) const;

	/// Partial derivative as a jet of one order less. Frozen coordinates
	/// (r on a Surface chart) differentiate to zero.
	Jet partial(Coord which) const;

	Jet truncated(int order) const;

	bool is_variable(Coord which) const;

	Jet& operator+=(const Jet& o);
	Jet& operator-=(const Jet& o);
	Jet& operator*=(const Jet& o);
	Jet& operator/=(const Jet& o);
	Jet& operator+=(Complex s);
	Jet& operator-=(Complex s);
	Jet& operator*=(Complex s);
	Jet& operator/=(Complex s);

	Jet operator-() const;

	friend Jet operator+(Jet a, const Jet& b) { return a += b; }
	friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
	friend Jet operator*(const Jet& a, const Jet& b);
	friend Jet operator/(const Jet& a, const Jet& b);
	friend Jet operator+(Jet a, Complex s) { return a += s; }
	friend Jet operator+(Complex s, Jet a) { return a += s; }
	friend Jet operator-(Jet a, Complex s) { return a -= s; }
	friend Jet operator-(Complex s, const Jet& a) { return (-a) += s; }
	friend Jet operator*(Jet a, Complex s) { return a *= s; }
	friend Jet operator*(Complex s, Jet a) { return a *= s; }
	friend Jet operator/(Jet a, Complex s) { return a /= s; }

	/// Largest coefficient magnitude.
	double max_abs() const;

private:
	void check_compatible(const Jet& o) const;
	int local_slot(Coord which) const;

	Chart chart_;
	SpherePoint base_;
	const JetLayout* layout_;
	std::vector<Complex> coeffs_;
};

/// f(a) = sum_n f^(n)(a0) / n! (a - a0)^n with derivative values supplied as
/// taylor[n] = f^(n)(a0) / n!, n = 0..order.
Jet compose(const Jet& a, std::span<const Complex> taylor);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet reciprocal(const Jet& a);
Jet pow(const Jet& a, int n);
/// tan(a/2) = (1 - cos a) / sin a, regular at a = 0.
Jet tan_half(const Jet& a);
/// cot(a/2) = (1 + cos a) / sin a, regular at a = pi.
Jet cot_half(const Jet& a);

}  // namespace mono

#endif
