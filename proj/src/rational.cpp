#include "wronsk/rational.hpp"

#include "wronsk/errors.hpp"

#include <stdexcept>

namespace wronsk {

Rational::Rational(const Integer &num, const Integer &den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	v_ = mpq_class(num, den);
	v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	std::string s(text);
	mpq_class q;
	if (s.empty() || q.set_str(s, 10) != 0)
		throw ParseError(0, "not a rational number: '" + s + "'");
	if (q.get_den() == 0)
		throw ParseError(s.find('/'), "zero denominator");
	q.canonicalize();
	Rational r;
	r.v_ = q;
	return r;
}

Rational Rational::operator-() const
{
	Rational r;
	r.v_ = -v_;
	return r;
}

Rational &Rational::operator+=(const Rational &o)
{
	v_ += o.v_;
	return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
	v_ -= o.v_;
	return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
	v_ *= o.v_;
	return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("rational division by zero");
	v_ /= o.v_;
	return *this;
}

Integer factorial(unsigned n)
{
	Integer r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

Integer binomial(unsigned n, unsigned k)
{
	Integer r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

} // namespace wronsk
