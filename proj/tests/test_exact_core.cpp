#include "oracles.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/monomial.hpp"
#include "wronsk/poly.hpp"
#include "wronsk/rational.hpp"
#include "wronsk/sampler.hpp"

#include <gtest/gtest.h>

using namespace wronsk;

namespace {

Poly P(const char *text)
{
	return Poly::parse(text);
}

} // namespace

TEST(Rational, LowestTerms)
{
	Rational r(6, -4);
	EXPECT_EQ(r.numerator(), -3);
	EXPECT_EQ(r.denominator(), 2);
	EXPECT_EQ(r.to_string(), "-3/2");
	EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
	EXPECT_EQ(Rational::parse("-7"), Rational(-7));
}

TEST(Rational, ZeroDenominator)
{
	EXPECT_THROW(Rational(1, 0), std::domain_error);
	EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FieldAxiomsOnSamples)
{
	Sampler s(7);
	for (int i = 0; i < 200; ++i) {
		Rational a = s.rational(50, 20), b = s.rational(50, 20), c = s.rational(50, 20);
		EXPECT_EQ((a + b) + c, a + (b + c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(a - a, Rational(0));
		if (!b.is_zero())
			EXPECT_EQ(a / b * b, a);
	}
}

TEST(Rational, BigFactorials)
{
	EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
	EXPECT_EQ(binomial(10, 3), 120);
	EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Poly, DegreeOfZeroIsMinusInfinity)
{
	EXPECT_TRUE(Poly().degree().is_minus_infinity());
	EXPECT_EQ(Poly(5).degree(), 0u);
	EXPECT_EQ((Poly() * P("x^3")).degree(), Poly().degree());
	EXPECT_LT(Poly().degree(), Poly(1).degree());
	EXPECT_TRUE((Poly().degree() + Degree::finite(4)).is_minus_infinity());
}

TEST(Poly, TrimsLeadingZeros)
{
	Poly p(std::vector<Rational>{1, 2, 0, 0});
	EXPECT_EQ(p.degree(), 1u);
	EXPECT_EQ(P("x^2 - x^2"), Poly());
}

TEST(Poly, Rendering)
{
	EXPECT_EQ(P("3/2*x^2 - x + 1").to_string(), "3/2*x^2 - x + 1");
	EXPECT_EQ(Poly::divided_power(3).to_string(), "x^3/6");
	EXPECT_EQ(P("-x^2/2 + 3").to_string(), "-x^2/2 + 3");
	EXPECT_EQ(P("2*x").to_string(), "2*x");
	EXPECT_EQ(Poly().to_string(), "0");
	EXPECT_THROW(P("y^2 + 1"), ParseError);
	EXPECT_EQ(Poly::parse("y^2 + 1", 'y').to_string('y'), "y^2 + 1");
}

TEST(Poly, ParseGrammar)
{
	EXPECT_EQ(P("(x + 1)^2"), P("x^2 + 2*x + 1"));
	EXPECT_EQ(P("x*x*x/6"), Poly::divided_power(3));
	EXPECT_EQ(P(" -3 "), Poly(-3));
	EXPECT_EQ(P("2*(x - 1)*(x + 1)"), P("2*x^2 - 2"));
}

TEST(Poly, ParseErrorsCarryPosition)
{
	try {
		P("x + * 2");
		FAIL() << "expected ParseError";
	} catch (const ParseError &e) {
		EXPECT_EQ(e.position(), 4u);
	}
	EXPECT_THROW(P(""), ParseError);
	EXPECT_THROW(P("x^"), ParseError);
	EXPECT_THROW(P("x/0"), ParseError);
	EXPECT_THROW(P("1/x"), ParseError);
	EXPECT_THROW(P("x^(1/2)"), ParseError);
	EXPECT_THROW(P("z + 1"), ParseError);
	EXPECT_THROW(P("(x + 1"), ParseError);
}

TEST(Poly, ParseRoundTrip)
{
	Sampler s(11);
	for (int i = 0; i < 300; ++i) {
		Poly p = s.poly(static_cast<std::size_t>(s.uniform(0, 9)));
		EXPECT_EQ(P(p.to_string().c_str()), p) << p;
	}
}

TEST(PolyDerivative, Examples)
{
	EXPECT_EQ(derivative(P("x^2/2"), 1), P("x"));
	EXPECT_EQ(derivative(P("x^3/6"), 3), Poly(1));
	EXPECT_EQ(derivative(Poly(7), 1), Poly());
	EXPECT_EQ(derivative(P("x^4"), 0), P("x^4"));
	EXPECT_EQ(derivative(P("x^4"), 9), Poly());
}

TEST(PolyDerivative, LeibnizRuleRandomized)
{
	Sampler s(1);
	for (int i = 0; i < 200; ++i) {
		Poly p = s.poly(static_cast<std::size_t>(s.uniform(0, 12)));
		Poly q = s.poly(static_cast<std::size_t>(s.uniform(0, 12)));
		EXPECT_EQ(derivative(p * q), derivative(p) * q + p * derivative(q));
		EXPECT_EQ(derivative(p, 3), oracle::diff(p, 3));
	}
}

TEST(PolyCompose, Examples)
{
	EXPECT_EQ(compose(P("x^2"), P("x^2")), P("x^4"));
	Poly p = P("3/2*x^2 - x + 1");
	EXPECT_EQ(compose(p, Poly::x()), p);
	EXPECT_EQ(compose(P("x^2 + 1"), P("x + 1")), P("x^2 + 2*x + 2"));
	EXPECT_EQ(compose(P("x^2 + 1"), P("x + 1")), oracle::compose(P("x^2 + 1"), P("x + 1")));
}

TEST(PolyCompose, AssociativeAndMatchesOracle)
{
	Sampler s(2);
	for (int i = 0; i < 60; ++i) {
		Poly p = s.poly(static_cast<std::size_t>(s.uniform(0, 4)));
		Poly q = s.poly(static_cast<std::size_t>(s.uniform(0, 3)));
		Poly r = s.poly(static_cast<std::size_t>(s.uniform(0, 3)));
		EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
		EXPECT_EQ(compose(p, q), oracle::compose(p, q));
	}
}

TEST(PolyDivision, ExactAndRemainder)
{
	auto [q, r] = divmod(P("x^3 - 1"), P("x - 1"));
	EXPECT_EQ(q, P("x^2 + x + 1"));
	EXPECT_EQ(r, Poly());
	auto [q2, r2] = divmod(P("x^2 + 1"), P("2*x"));
	EXPECT_EQ(q2, P("x/2"));
	EXPECT_EQ(r2, Poly(1));
	EXPECT_THROW(divide_exact(P("x^2 + 1"), P("x")), InternalInconsistencyError);
	EXPECT_THROW(divmod(P("x"), Poly()), std::domain_error);
}

TEST(PolyProduct, DegreesAdd)
{
	Sampler s(3);
	for (int i = 0; i < 100; ++i) {
		Poly p = s.nonzero_poly(8), q = s.nonzero_poly(8);
		EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
	}
}

TEST(Monomial, DerivativeExamples)
{
	EXPECT_EQ(derivative(Monomial::power(5), 1), Monomial(5, 4));
	EXPECT_EQ(derivative(Monomial::power(Rational(1, 2)), 1), Monomial(Rational(1, 2), Rational(-1, 2)));
	EXPECT_EQ(derivative(Monomial::power(2), 3), Monomial());
	EXPECT_TRUE(derivative(Monomial::power(2), 3).is_zero());
}

TEST(Monomial, Rendering)
{
	EXPECT_EQ(Monomial(5, Rational(7, 2)).to_string(), "5*x^(7/2)");
	EXPECT_EQ(Monomial(3, 6).to_string(), "3*x^6");
	EXPECT_EQ(Monomial::parse("5*x^(7/2)"), Monomial(5, Rational(7, 2)));
	EXPECT_EQ(Monomial::parse("x^3/6"), Monomial(Rational(1, 6), 3));
	EXPECT_THROW(Monomial::parse("x + 1"), ParseError);
}

TEST(Monomial, ProductAddsExponents)
{
	Monomial a(2, Rational(1, 3)), b(Rational(-1, 4), Rational(5, 3));
	EXPECT_EQ(a * b, Monomial(Rational(-1, 2), 2));
}

TEST(Monomial, AgreesWithPolyDerivative)
{
	for (std::size_t k = 0; k <= 10; ++k)
		for (std::size_t j = 0; j <= 12; ++j) {
			Monomial m = derivative(Monomial(3, static_cast<long>(k)), j);
			Poly p = derivative(Poly::monomial(3, k), j);
			if (p.is_zero()) {
				EXPECT_TRUE(m.is_zero());
			} else {
				EXPECT_EQ(m.exponent(), Rational(static_cast<long>(k - j)));
				EXPECT_EQ(Poly::monomial(m.coeff(), k - j), p);
			}
		}
}

TEST(Sampler, Deterministic)
{
	Sampler a(42), b(42);
	for (int i = 0; i < 50; ++i)
		EXPECT_EQ(a.poly(5), b.poly(5));
}
