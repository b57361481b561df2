#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace wronsk {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
	Rational() = default;
	Rational(long v) : v_(v) {}
	Rational(int v) : v_(static_cast<long>(v)) {}
	Rational(const Integer &v) : v_(v) {}
	Rational(const Integer &num, const Integer &den);
	Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

	/// Accepts "p" or "p/q" with optional leading sign.
	static Rational parse(std::string_view text);

	Integer numerator() const { return v_.get_num(); }
	Integer denominator() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	Rational operator-() const;
	Rational &operator+=(const Rational &o);
	Rational &operator-=(const Rational &o);
	Rational &operator*=(const Rational &o);
	/// Throws std::domain_error on division by zero.
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

	std::string to_string() const { return v_.get_str(); }
	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

	const mpq_class &raw() const { return v_; }

private:
	mpq_class v_;
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace wronsk
