#include "wronsk/poly.hpp"

#include "term_parser.hpp"
#include "wronsk/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace wronsk {

Poly::Poly(const Rational &c)
{
	if (!c.is_zero())
		coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational &c, std::size_t k)
{
	if (c.is_zero())
		return Poly();
	std::vector<Rational> v(k + 1);
	v[k] = c;
	return Poly(std::move(v));
}

Poly Poly::divided_power(std::size_t k)
{
	return monomial(Rational(Integer(1), factorial(static_cast<unsigned>(k))), k);
}

Poly Poly::parse(std::string_view text, char variable)
{
	detail::TermMap terms = detail::parse_terms(text, variable);
	std::vector<Rational> v;
	for (const auto &[e, c] : terms) {
		if (!e.is_integer() || e.sign() < 0)
			throw ParseError(0, "exponent " + e.to_string() + " is not a nonnegative integer");
		std::size_t k = e.numerator().get_ui();
		if (v.size() <= k)
			v.resize(k + 1);
		v[k] = c;
	}
	return Poly(std::move(v));
}

void Poly::trim()
{
	while (!coeffs_.empty() && coeffs_.back().is_zero())
		coeffs_.pop_back();
}

Degree Poly::degree() const
{
	return coeffs_.empty() ? Degree::minus_infinity() : Degree::finite(coeffs_.size() - 1);
}

Rational Poly::coeff(std::size_t k) const
{
	return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Poly::operator()(const Rational &at) const
{
	Rational r;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		r = r * at + *it;
	return r;
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto &c : r.coeffs_)
		c = -c;
	return r;
}

Poly &Poly::operator+=(const Poly &o)
{
	if (coeffs_.size() < o.coeffs_.size())
		coeffs_.resize(o.coeffs_.size());
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] += o.coeffs_[i];
	trim();
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	if (coeffs_.size() < o.coeffs_.size())
		coeffs_.resize(o.coeffs_.size());
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] -= o.coeffs_[i];
	trim();
	return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
	if (a.is_zero() || b.is_zero())
		return Poly();
	std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
		if (a.coeffs_[i].is_zero())
			continue;
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
			v[i + j] += a.coeffs_[i] * b.coeffs_[j];
	}
	return Poly(std::move(v));
}

Poly &Poly::operator*=(const Poly &o)
{
	*this = *this * o;
	return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	for (auto &x : coeffs_)
		x *= c;
	return *this;
}

std::string Poly::to_string(char variable) const
{
	if (is_zero())
		return "0";
	std::string out;
	for (std::size_t k = coeffs_.size(); k-- > 0;) {
		if (coeffs_[k].is_zero())
			continue;
		std::string var(1, variable);
		std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
		detail::append_term(out, coeffs_[k], power);
	}
	return out;
}

Poly derivative(const Poly &p, std::size_t j)
{
	const auto &c = p.coeffs();
	if (j >= c.size())
		return Poly();
	std::vector<Rational> v(c.size() - j);
	for (std::size_t k = j; k < c.size(); ++k) {
		Integer falling = 1;
		for (std::size_t t = 0; t < j; ++t)
			falling *= static_cast<unsigned long>(k - t);
		v[k - j] = c[k] * Rational(falling);
	}
	return Poly(std::move(v));
}

Poly compose(const Poly &p, const Poly &q)
{
	Poly r;
	const auto &c = p.coeffs();
	for (auto it = c.rbegin(); it != c.rend(); ++it)
		r = r * q + Poly(*it);
	return r;
}

PolyDivision divmod(const Poly &a, const Poly &b)
{
	if (b.is_zero())
		throw std::domain_error("polynomial division by zero");
	std::vector<Rational> rem = a.coeffs();
	const auto &d = b.coeffs();
	std::size_t db = d.size() - 1;
	if (rem.size() < d.size())
		return {Poly(), a};
	std::vector<Rational> quo(rem.size() - db);
	Rational inv_lead = Rational(1) / d.back();
	for (std::size_t k = rem.size(); k-- > db;) {
		if (rem[k].is_zero())
			continue;
		Rational f = rem[k] * inv_lead;
		quo[k - db] = f;
		for (std::size_t i = 0; i <= db; ++i)
			rem[k - db + i] -= f * d[i];
	}
	return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly &a, const Poly &b)
{
	auto [q, r] = divmod(a, b);
	if (!r.is_zero())
		throw InternalInconsistencyError("inexact polynomial division: (" + a.to_string() + ") / (" +
		                                 b.to_string() + ")");
	return q;
}

Poly pow(const Poly &p, std::size_t k)
{
	Poly r(1);
	Poly base = p;
	while (k) {
		if (k & 1)
			r *= base;
		k >>= 1;
		if (k)
			base *= base;
	}
	return r;
}

} // namespace wronsk
