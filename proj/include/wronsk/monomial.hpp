#pragma once

#include "rational.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace wronsk {

/// Single term c * x^nu with a rational exponent. The zero monomial is
/// normalized to exponent 0.
class Monomial {
public:
	Monomial() = default;
	Monomial(const Rational &coeff, const Rational &exponent);

	/// x^nu
	static Monomial power(const Rational &exponent) { return Monomial(Rational(1), exponent); }
	/// Single-term text such as "5*x^(7/2)" or "x^3/6".
	static Monomial parse(std::string_view text);

	const Rational &coeff() const { return coeff_; }
	const Rational &exponent() const { return exponent_; }
	bool is_zero() const { return coeff_.is_zero(); }

	Monomial operator-() const { return Monomial(-coeff_, exponent_); }
	friend Monomial operator*(const Monomial &a, const Monomial &b);
	friend Monomial operator*(const Rational &c, const Monomial &m) { return Monomial(c * m.coeff_, m.exponent_); }
	friend bool operator==(const Monomial &, const Monomial &) = default;

	std::string to_string() const;
	friend std::ostream &operator<<(std::ostream &os, const Monomial &m) { return os << m.to_string(); }

private:
	Rational coeff_;
	Rational exponent_;
};

/// c * nu (nu-1) ... (nu-j+1) * x^(nu-j)
Monomial derivative(const Monomial &m, std::size_t j = 1);

} // namespace wronsk
