#include "wronsk/monomial.hpp"

#include "term_parser.hpp"
#include "wronsk/errors.hpp"

namespace wronsk {

Monomial::Monomial(const Rational &coeff, const Rational &exponent)
    : coeff_(coeff), exponent_(coeff.is_zero() ? Rational() : exponent)
{}

Monomial Monomial::parse(std::string_view text)
{
	detail::TermMap terms = detail::parse_terms(text, 'x');
	if (terms.empty())
		return Monomial();
	if (terms.size() != 1)
		throw ParseError(0, "expected a single term, got " + std::to_string(terms.size()));
	return Monomial(terms.begin()->second, terms.begin()->first);
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
	return Monomial(a.coeff_ * b.coeff_, a.exponent_ + b.exponent_);
}

std::string Monomial::to_string() const
{
	if (is_zero())
		return "0";
	std::string power;
	if (exponent_.is_zero())
		power = "";
	else if (exponent_.is_one())
		power = "x";
	else if (exponent_.is_integer() && exponent_.sign() > 0)
		power = "x^" + exponent_.to_string();
	else
		power = "x^(" + exponent_.to_string() + ")";
	std::string out;
	detail::append_term(out, coeff_, power);
	return out;
}

Monomial derivative(const Monomial &m, std::size_t j)
{
	Rational c = m.coeff();
	Rational e = m.exponent();
	for (std::size_t t = 0; t < j && !c.is_zero(); ++t) {
		c *= e;
		e -= Rational(1);
	}
	return Monomial(c, e);
}

} // namespace wronsk
