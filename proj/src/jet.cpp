#include "mono/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace mono
{

namespace
{

// Base values closer to zero than this are treated as exact zeros when
// dividing. sin(pi) evaluates to ~1.2e-16, which must count as a pole.
constexpr double kSingularThreshold = 1e-13;

std::size_t binomial(int n, int k)
{
	std::size_t r = 1;
	for (int i = 1; i <= k; ++i)
		r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
	return r;
}

int chart_vars(Chart c) { return c == Chart::Spatial ? 3 : 2; }

}  // namespace

Vec3 SpherePoint::cartesian() const
{
	return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

const char* to_string(Coord c)
{
	switch (c)
	{
	case Coord::R: return "r";
	case Coord::Theta: return "theta";
	case Coord::Phi: return "phi";
	}
	return "?";
}

std::size_t JetLayout::size(int nvars, int order) { return binomial(order + nvars, nvars); }

int JetLayout::index_of(const std::array<int, 3>& local) const
{
	int deg = 0;
	for (int v = 0; v < nvars; ++v)
	{
		if (local[v] < 0)
			return -1;
		deg += local[v];
	}
	for (int v = nvars; v < 3; ++v)
		if (local[v] != 0)
			return -1;
	if (deg > order)
		return -1;
	if (deg == 0)
		return 0;
	// Within a degree block entries run with the leading exponent descending.
	const int idx = static_cast<int>(size(nvars, deg - 1));
	if (nvars == 1)
		return idx;
	if (nvars == 2)
		return idx + (deg - local[0]);
	// nvars == 3: block of leading exponent e0 has (deg - e0 + 1) entries
	const int e0 = local[0];
	int offset = 0;
	for (int lead = deg; lead > e0; --lead)
		offset += deg - lead + 1;
	return idx + offset + (deg - e0 - local[1]);
}

const JetLayout& JetLayout::get(int nvars, int order)
{
	if (nvars < 1 || nvars > 3)
		throw std::invalid_argument("jet: unsupported variable count " + std::to_string(nvars));
	if (order < 0)
		throw std::invalid_argument("jet: negative order");

	static std::mutex mutex;
	static std::map<std::pair<int, int>, std::unique_ptr<JetLayout>> cache;

	std::lock_guard lock(mutex);
	auto& slot = cache[{nvars, order}];
	if (slot)
		return *slot;

	auto layout = std::make_unique<JetLayout>();
	layout->nvars = nvars;
	layout->order = order;
	for (int deg = 0; deg <= order; ++deg)
	{
		if (nvars == 1)
			layout->exponents.push_back({deg, 0, 0});
		else if (nvars == 2)
			for (int e0 = deg; e0 >= 0; --e0)
				layout->exponents.push_back({e0, deg - e0, 0});
		else
			for (int e0 = deg; e0 >= 0; --e0)
				for (int e1 = deg - e0; e1 >= 0; --e1)
					layout->exponents.push_back({e0, e1, deg - e0 - e1});
	}

	const int n = static_cast<int>(layout->exponents.size());
	layout->raise.resize(n);
	for (int i = 0; i < n; ++i)
		for (int v = 0; v < 3; ++v)
		{
			if (v >= nvars)
			{
				layout->raise[i][v] = -1;
				continue;
			}
			auto e = layout->exponents[i];
			++e[v];
			layout->raise[i][v] = layout->index_of(e);
		}

	layout->product_begin.reserve(static_cast<std::size_t>(n) + 1);
	for (int i = 0; i < n; ++i)
	{
		layout->product_begin.push_back(layout->products.size());
		const auto& a = layout->exponents[i];
		for (int j = 0; j < n; ++j)
		{
			const auto& b = layout->exponents[j];
			const std::array<int, 3> s{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
			const int k = layout->index_of(s);
			if (k >= 0)
				layout->products.push_back({i, j, k});
		}
	}
	layout->product_begin.push_back(layout->products.size());

	slot = std::move(layout);
	return *slot;
}

Jet::Jet(Chart chart, int order, const SpherePoint& base)
    : chart_(chart), base_(base), layout_(&JetLayout::get(chart_vars(chart), order)),
      coeffs_(layout_->exponents.size(), Complex{})
{
}

Jet Jet::constant(Chart chart, int order, const SpherePoint& base, Complex value)
{
	Jet j(chart, order, base);
	j.coeffs_[0] = value;
	return j;
}

Jet Jet::variable(Chart chart, int order, const SpherePoint& base, Coord which)
{
	Jet j(chart, order, base);
	switch (which)
	{
	case Coord::R: j.coeffs_[0] = base.r; break;
	case Coord::Theta: j.coeffs_[0] = base.theta; break;
	case Coord::Phi: j.coeffs_[0] = base.phi; break;
	}
	const int slot = j.local_slot(which);
	if (slot >= 0 && order >= 1)
		j.coeffs_[static_cast<std::size_t>(j.layout_->raise[0][slot])] = 1.0;
	return j;
}

int Jet::local_slot(Coord which) const
{
	if (chart_ == Chart::Spatial)
		return static_cast<int>(which);
	switch (which)
	{
	case Coord::R: return -1;
	case Coord::Theta: return 0;
	case Coord::Phi: return 1;
	}
	return -1;
}

bool Jet::is_variable(Coord which) const { return local_slot(which) >= 0; }

Complex Jet::coeff(const MultiIndex& alpha) const
{
	std::array<int, 3> local{0, 0, 0};
	if (chart_ == Chart::Spatial)
		local = alpha;
	else
	{
		if (alpha[0] != 0)
			return {};
		local = {alpha[1], alpha[2], 0};
	}
	const int idx = layout_->index_of(local);
	return idx < 0 ? Complex{} : coeffs_[static_cast<std::size_t>(idx)];
}

void Jet::set_coeff(const MultiIndex& alpha, Complex v)
{
	std::array<int, 3> local = alpha;
	if (chart_ == Chart::Surface)
	{
		if (alpha[0] != 0)
			throw std::invalid_argument("jet: r exponent on a surface chart");
		local = {alpha[1], alpha[2], 0};
	}
	const int idx = layout_->index_of(local);
	if (idx < 0)
		throw std::invalid_argument("jet: multi-index beyond jet order");
	coeffs_[static_cast<std::size_t>(idx)] = v;
}

Complex Jet::derivative(const MultiIndex& alpha) const
{
	double factorial = 1.0;
	for (int e : alpha)
		for (int i = 2; i <= e; ++i)
			factorial *= i;
	return factorial * coeff(alpha);
}

Jet Jet::partial(Coord which) const
{
	if (order() < 1)
		throw std::invalid_argument("jet: cannot differentiate an order-0 jet");
	Jet out(chart_, order() - 1, base_);
	const int v = local_slot(which);
	if (v < 0)
		return out;
	const auto n = out.coeffs_.size();
	for (std::size_t i = 0; i < n; ++i)
	{
		const int up = layout_->raise[i][v];
		out.coeffs_[i] = static_cast<double>(layout_->exponents[i][v] + 1) * coeffs_[static_cast<std::size_t>(up)];
	}
	return out;
}

Jet Jet::truncated(int new_order) const
{
	if (new_order > order())
		throw std::invalid_argument("jet: cannot truncate to a higher order");
	Jet out(chart_, new_order, base_);
	std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
	return out;
}

void Jet::check_compatible(const Jet& o) const
{
	if (chart_ != o.chart_ || order() != o.order())
		throw std::invalid_argument("jet: mismatched chart or order");
	if (!(base_ == o.base_))
		throw std::invalid_argument("jet: mismatched base points");
}

Jet& Jet::operator+=(const Jet& o)
{
	check_compatible(o);
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		coeffs_[i] += o.coeffs_[i];
	return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
	check_compatible(o);
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		coeffs_[i] -= o.coeffs_[i];
	return *this;
}

Jet operator*(const Jet& a, const Jet& b)
{
	a.check_compatible(b);
	Jet out(a.chart_, a.order(), a.base_);
	const auto& pa = a.coeffs_;
	const auto& pb = b.coeffs_;
	auto& po = out.coeffs_;
	const auto& layout = *a.layout_;
	for (std::size_t i = 0; i < pa.size(); ++i)
	{
		const Complex x = pa[i];
		if (x == Complex{})
			continue;
		for (std::size_t q = layout.product_begin[i]; q < layout.product_begin[i + 1]; ++q)
		{
			const auto& p = layout.products[q];
			po[static_cast<std::size_t>(p.out)] += x * pb[static_cast<std::size_t>(p.rhs)];
		}
	}
	return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator+=(Complex s)
{
	coeffs_[0] += s;
	return *this;
}

Jet& Jet::operator-=(Complex s)
{
	coeffs_[0] -= s;
	return *this;
}

Jet& Jet::operator*=(Complex s)
{
	for (auto& c : coeffs_)
		c *= s;
	return *this;
}

Jet& Jet::operator/=(Complex s)
{
	if (std::abs(s) == 0.0)
		throw SingularValue("jet: division by zero scalar");
	for (auto& c : coeffs_)
		c /= s;
	return *this;
}

Jet Jet::operator-() const
{
	Jet out = *this;
	for (auto& c : out.coeffs_)
		c = -c;
	return out;
}

double Jet::max_abs() const
{
	double m = 0.0;
	for (const auto& c : coeffs_)
		m = std::max(m, std::abs(c));
	return m;
}

Jet compose(const Jet& a, std::span<const Complex> taylor)
{
	const int k = a.order();
	if (static_cast<int>(taylor.size()) < k + 1)
		throw std::invalid_argument("jet: composition needs order+1 Taylor coefficients");
	Jet h = a;
	h.coeffs()[0] = 0.0;
	// Horner in the nilpotent offset h; h^(k+1) vanishes.
	Jet out = Jet::constant(a.chart(), k, a.base(), taylor[static_cast<std::size_t>(k)]);
	for (int n = k - 1; n >= 0; --n)
	{
		out = out * h;
		out += taylor[static_cast<std::size_t>(n)];
	}
	return out;
}

namespace
{

std::vector<Complex> taylor_of_sin(Complex x0, int k, bool cosine)
{
	const Complex s = std::sin(x0), c = std::cos(x0);
	// derivative cycle of sin: s, c, -s, -c
	const std::array<Complex, 4> cycle_sin{s, c, -s, -c};
	const std::array<Complex, 4> cycle_cos{c, -s, -c, s};
	std::vector<Complex> t(static_cast<std::size_t>(k) + 1);
	double fact = 1.0;
	for (int n = 0; n <= k; ++n)
	{
		if (n > 0)
			fact *= n;
		t[static_cast<std::size_t>(n)] = (cosine ? cycle_cos : cycle_sin)[static_cast<std::size_t>(n % 4)] / fact;
	}
	return t;
}

}  // namespace

Jet sin(const Jet& a) { return compose(a, taylor_of_sin(a.value(), a.order(), false)); }

Jet cos(const Jet& a) { return compose(a, taylor_of_sin(a.value(), a.order(), true)); }

Jet exp(const Jet& a)
{
	const Complex e = std::exp(a.value());
	std::vector<Complex> t(static_cast<std::size_t>(a.order()) + 1);
	double fact = 1.0;
	for (int n = 0; n <= a.order(); ++n)
	{
		if (n > 0)
			fact *= n;
		t[static_cast<std::size_t>(n)] = e / fact;
	}
	return compose(a, t);
}

Jet reciprocal(const Jet& a)
{
	const Complex v = a.value();
	if (std::abs(v) <= kSingularThreshold)
		throw SingularValue("jet: reciprocal of a jet with zero value");
	std::vector<Complex> t(static_cast<std::size_t>(a.order()) + 1);
	Complex term = 1.0 / v;
	for (int n = 0; n <= a.order(); ++n)
	{
		t[static_cast<std::size_t>(n)] = term;
		term *= -1.0 / v;
	}
	return compose(a, t);
}

Jet pow(const Jet& a, int n)
{
	if (n < 0)
		return pow(reciprocal(a), -n);
	Jet out = Jet::constant(a.chart(), a.order(), a.base(), 1.0);
	Jet base = a;
	while (n > 0)
	{
		if (n & 1)
			out = out * base;
		n >>= 1;
		if (n > 0)
			base = base * base;
	}
	return out;
}

Jet tan_half(const Jet& a) { return sin(a) / (1.0 + cos(a)); }

Jet cot_half(const Jet& a) { return sin(a) / (1.0 - cos(a)); }

}  // namespace mono
