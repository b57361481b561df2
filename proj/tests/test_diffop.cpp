#include "oracles.hpp"

#include "wronsk/diffop.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/sampler.hpp"
#include "wronsk/wronskian.hpp"

#include <gtest/gtest.h>

using namespace wronsk;

namespace {

Poly P(const char *text)
{
	return Poly::parse(text);
}

DiffOp D(const char *c, std::size_t order)
{
	return DiffOp(P(c), order);
}

DiffOp random_op(Sampler &s, std::size_t max_order)
{
	DiffOp a;
	for (std::size_t j = 0; j <= max_order; ++j)
		if (s.uniform(0, 2))
			a += DiffOp(s.poly(static_cast<std::size_t>(s.uniform(0, 3)), 5), j);
	return a;
}

} // namespace

TEST(DiffOp, Rendering)
{
	EXPECT_EQ((D("x^2", 2) + D("x + 1", 1)).to_string(), "x^2*D^2 + (x + 1)*D");
	EXPECT_EQ((D("1", 3) - D("2", 0)).to_string(), "D^3 - 2");
	EXPECT_EQ(D("-1", 1).to_string(), "-D");
	EXPECT_EQ(DiffOp().to_string(), "0");
	EXPECT_EQ(D("0", 4), DiffOp());
}

TEST(DiffOp, Order)
{
	EXPECT_TRUE(DiffOp().order().is_minus_infinity());
	DiffOp a = D("x", 3) + D("1", 1);
	EXPECT_EQ(a.order(), 3u);
	EXPECT_FALSE(a.pure_order().has_value());
	EXPECT_EQ(D("x^2", 2).pure_order(), 2u);
}

TEST(Compose, Examples)
{
	EXPECT_EQ(compose(D("1", 1), D("x", 1)), D("x", 2) + D("1", 1));
	DiffOp b = D("x^2", 3) + D("7", 0);
	EXPECT_EQ(compose(DiffOp::identity(), b), b);
	EXPECT_EQ(compose(D("x^2", 2), D("x", 1)), D("x^3", 3) + D("2*x^2", 2));
	for (std::size_t k = 0; k <= 8; ++k) {
		Poly f = Poly::monomial(1, k);
		EXPECT_EQ(apply(compose(D("x^2", 2), D("x", 1)), f), oracle::apply(D("x^2", 2), oracle::apply(D("x", 1), f)));
	}
}

TEST(Apply, Examples)
{
	EXPECT_EQ(apply(D("1", 2), P("x^3")), P("6*x"));
	for (std::size_t k = 0; k <= 6; ++k)
		EXPECT_EQ(apply(D("x", 1), Poly::monomial(1, k)), Poly::monomial(static_cast<long>(k), k));
	EXPECT_EQ(apply(D("x", 2) + D("1", 1), P("x^3")), P("9*x^2"));
}

TEST(Compose, MatchesFunctionComposition)
{
	Sampler s(5);
	for (int i = 0; i < 60; ++i) {
		DiffOp a = random_op(s, 3), b = random_op(s, 3);
		Poly f = s.poly(static_cast<std::size_t>(s.uniform(0, 10)));
		EXPECT_EQ(apply(compose(a, b), f), oracle::apply(a, oracle::apply(b, f)));
		EXPECT_EQ(apply(a, f), oracle::apply(a, f));
	}
}

TEST(Compose, AssociativeAndOrderAdds)
{
	Sampler s(6);
	for (int i = 0; i < 40; ++i) {
		DiffOp a = random_op(s, 2), b = random_op(s, 2), c = random_op(s, 2);
		EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
		if (!a.is_zero() && !b.is_zero())
			EXPECT_EQ(compose(a, b).order(), a.order() + b.order());
	}
}

TEST(AltComposeOps, VectorFieldCommutator)
{
	Sampler s(8);
	for (int i = 0; i < 40; ++i) {
		Poly X = s.poly(static_cast<std::size_t>(s.uniform(0, 5)));
		Poly Y = s.poly(static_cast<std::size_t>(s.uniform(0, 5)));
		std::vector<DiffOp> ops{DiffOp(X, 1), DiffOp(Y, 1)};
		EXPECT_EQ(alt_compose_ops(ops), DiffOp(X * derivative(Y) - Y * derivative(X), 1));
	}
}

TEST(AltComposeOps, RepeatedArgumentVanishes)
{
	std::vector<DiffOp> ops{D("x^2 + 1", 2), D("x^2 + 1", 2)};
	EXPECT_TRUE(alt_compose_ops(ops).is_zero());
}

TEST(AltComposeOps, FourSecondOrderMonomials)
{
	// The 24-term sum, computed by acting on test functions, is 24*D^2.
	std::vector<DiffOp> ops{D("1", 2), D("x", 2), D("x^2", 2), D("x^3", 2)};
	DiffOp got = alt_compose_ops(ops);
	for (std::size_t k = 0; k <= 10; ++k) {
		Poly f = Poly::monomial(1, k);
		EXPECT_EQ(apply(got, f), oracle::alt_action(ops, f));
	}
	EXPECT_EQ(got, D("24", 2));
	EXPECT_EQ(wronskian(std::vector<Poly>{P("1"), P("x"), P("x^2"), P("x^3")}), Poly(12));
}

TEST(AltComposeOps, MatchesOracleOnRandomOperators)
{
	Sampler s(9);
	for (int n = 2; n <= 4; ++n)
		for (int i = 0; i < 5; ++i) {
			std::vector<DiffOp> ops;
			for (int j = 0; j < n; ++j)
				ops.push_back(random_op(s, 2));
			DiffOp got = alt_compose_ops(ops);
			for (std::size_t k = 0; k <= 9; ++k) {
				Poly f = Poly::monomial(1, k);
				EXPECT_EQ(apply(got, f), oracle::alt_action(ops, f));
			}
		}
}

TEST(AltComposeOps, ArityCap)
{
	std::vector<DiffOp> ops(9, D("x", 1));
	EXPECT_THROW(alt_compose_ops(ops), ResourceLimitError);
	std::vector<DiffOp> few(3, D("x", 1));
	EXPECT_THROW(alt_compose_ops(few, 2), ResourceLimitError);
}

TEST(Theorem1, SecondOrderClosure)
{
	// Pure order p is preserved and lhs is proportional to W * D^p.
	Sampler s(10);
	for (int i = 0; i < 30; ++i) {
		std::vector<Poly> ws;
		for (int j = 0; j < 4; ++j)
			ws.push_back(s.nonzero_poly(4));
		Theorem1Report r = verify_theorem1(2, ws);
		EXPECT_TRUE(r.lhs.is_zero() || r.lhs.pure_order() == 2u);
		if (!r.rhs.is_zero())
			EXPECT_TRUE(r.ratio.has_value());
	}
}

TEST(Theorem1, FirstOrderExamples)
{
	std::vector<Poly> he{P("-2*x"), P("1")};
	Theorem1Report r = verify_theorem1(1, he);
	EXPECT_TRUE(r.equal);
	EXPECT_EQ(r.lhs, D("2", 1));
	EXPECT_EQ(r.rhs, D("2", 1));

	std::vector<Poly> same{P("x^2"), P("x^2")};
	Theorem1Report z = verify_theorem1(1, same);
	EXPECT_TRUE(z.equal);
	EXPECT_TRUE(z.lhs.is_zero());
	EXPECT_FALSE(z.ratio.has_value());
}

TEST(Theorem1, FirstOrderGrid)
{
	for (std::size_t a = 0; a <= 6; ++a)
		for (std::size_t b = 0; b <= 6; ++b) {
			std::vector<Poly> ws{Poly::monomial(1, a), Poly::monomial(1, b)};
			EXPECT_TRUE(verify_theorem1(1, ws).equal) << a << "," << b;
		}
}

TEST(Theorem1, SecondOrderMonomialInstance)
{
	std::vector<Poly> ws{P("1"), P("x"), P("x^2"), P("x^3")};
	Theorem1Report r = verify_theorem1(2, ws);
	EXPECT_EQ(r.rhs, D("12", 2));
	EXPECT_EQ(r.lhs, D("24", 2));
	EXPECT_FALSE(r.equal);
	EXPECT_EQ(r.ratio, Rational(2));
}

TEST(Theorem1, RejectsBadInput)
{
	std::vector<Poly> three{P("1"), P("x"), P("x^2")};
	EXPECT_THROW(verify_theorem1(2, three), std::invalid_argument);
	std::vector<Poly> zero{P("1"), Poly()};
	EXPECT_THROW(verify_theorem1(1, zero), std::invalid_argument);
}
