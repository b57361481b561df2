#pragma once

#include "rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wronsk {

/// Degree of a polynomial; the zero polynomial has degree minus infinity,
/// which absorbs addition.
class Degree {
public:
	static Degree minus_infinity() { return Degree(); }
	static Degree finite(std::size_t d) { return Degree(d); }

	bool is_minus_infinity() const { return !value_; }
	/// Precondition: finite.
	std::size_t value() const { return *value_; }

	friend Degree operator+(Degree a, Degree b)
	{
		if (!a.value_ || !b.value_)
			return minus_infinity();
		return finite(*a.value_ + *b.value_);
	}
	friend Degree operator*(Degree a, std::size_t k)
	{
		if (!a.value_)
			return minus_infinity();
		return finite(*a.value_ * k);
	}
	friend bool operator==(const Degree &, const Degree &) = default;
	friend std::strong_ordering operator<=>(const Degree &a, const Degree &b)
	{
		if (!a.value_ || !b.value_)
			return bool(a.value_) <=> bool(b.value_);
		return *a.value_ <=> *b.value_;
	}
	friend bool operator==(const Degree &a, std::size_t b) { return a.value_ == b; }

	std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

private:
	Degree() = default;
	explicit Degree(std::size_t d) : value_(d) {}
	std::optional<std::size_t> value_;
};

/// Dense univariate polynomial over the rationals in the variable x.
class Poly {
public:
	Poly() = default;
	Poly(const Rational &c);
	Poly(long c) : Poly(Rational(c)) {}
	Poly(int c) : Poly(Rational(c)) {}
	/// Coefficients indexed by degree (constant term first).
	explicit Poly(std::vector<Rational> coeffs);
	Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

	static Poly x() { return monomial(Rational(1), 1); }
	/// c * x^k
	static Poly monomial(const Rational &c, std::size_t k);
	/// x^k / k!
	static Poly divided_power(std::size_t k);

	/// Parse the text grammar of `to_string` (plus products, quotients by
	/// constants, parentheses and nonnegative integer powers).
	static Poly parse(std::string_view text, char variable = 'x');

	bool is_zero() const { return coeffs_.empty(); }
	bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
	Degree degree() const;
	/// Coefficient of x^k (zero past the degree).
	Rational coeff(std::size_t k) const;
	/// Precondition: nonzero.
	const Rational &leading() const { return coeffs_.back(); }
	const std::vector<Rational> &coeffs() const { return coeffs_; }

	Rational operator()(const Rational &at) const;

	Poly operator-() const;
	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	Poly &operator*=(const Poly &o);
	Poly &operator*=(const Rational &c);

	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
	friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
	friend bool operator==(const Poly &, const Poly &) = default;

	/// Canonical text, descending degree: "3/2*x^2 - x + 1", "x^3/6".
	std::string to_string(char variable = 'x') const;
	friend std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.to_string(); }

private:
	void trim();
	std::vector<Rational> coeffs_;
};

/// j-th formal derivative.
Poly derivative(const Poly &p, std::size_t j = 1);

/// Substitution p(q(x)).
Poly compose(const Poly &p, const Poly &q);

/// Euclidean division; throws std::domain_error when the divisor is zero.
struct PolyDivision {
	Poly quotient;
	Poly remainder;
};
PolyDivision divmod(const Poly &a, const Poly &b);

/// a / b when b divides a; throws InternalInconsistencyError otherwise.
Poly divide_exact(const Poly &a, const Poly &b);

Poly pow(const Poly &p, std::size_t k);

} // namespace wronsk
