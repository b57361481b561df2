#include "wronsk/shlie.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/wronskian.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace wronsk {
namespace {

// Calls visit(tuple) for every nondecreasing tuple of length len over 0..top.
template <class Visit>
void for_each_multiset(std::size_t len, std::size_t top, Visit visit)
{
	std::vector<std::size_t> t(len, 0);
	for (;;) {
		visit(t);
		std::size_t i = len;
		while (i > 0 && t[i - 1] == top)
			--i;
		if (i == 0)
			return;
		++t[i - 1];
		for (std::size_t j = i; j < len; ++j)
			t[j] = t[i - 1];
	}
}

Integer multiset_count(std::size_t len, std::size_t top)
{
	return binomial(static_cast<unsigned>(len + top), static_cast<unsigned>(len));
}

bool has_repeat(const std::vector<Poly> &fs)
{
	for (std::size_t i = 0; i < fs.size(); ++i)
		for (std::size_t j = i + 1; j < fs.size(); ++j)
			if (fs[i] == fs[j])
				return true;
	return false;
}

// Unshuffles are enumerated once and shared across a sweep.
class JacobiatorEval {
public:
	JacobiatorEval(std::size_t k, std::size_t l) : k_(k), l_(l), shuffles_(enumerate_unshuffles(l + 1, k)) {}

	Poly operator()(std::span<const Poly> fs)
	{
		if (fs.size() != k_ + l_ + 1)
			throw std::invalid_argument("jacobiator needs k + l + 1 arguments");
		Poly acc;
		std::vector<Poly> inner;
		std::vector<Poly> outer;
		for (const Unshuffle &u : shuffles_) {
			inner.clear();
			for (unsigned v : u.first_block)
				inner.push_back(fs[v - 1]);
			if (has_repeat(inner))
				continue;
			Poly w = wronskian(inner);
			if (w.is_zero())
				continue;
			outer.clear();
			outer.push_back(std::move(w));
			for (unsigned v : u.second_block)
				outer.push_back(fs[v - 1]);
			if (has_repeat(outer))
				continue;
			Poly term = wronskian(outer);
			if (u.sign < 0)
				acc -= term;
			else
				acc += term;
		}
		return acc;
	}

private:
	std::size_t k_;
	std::size_t l_;
	std::vector<Unshuffle> shuffles_;
};

} // namespace

Poly jacobiator(std::size_t k, std::size_t l, std::span<const Poly> fs)
{
	return JacobiatorEval(k, l)(fs);
}

Monomial jacobiator_monomials(std::size_t k, std::size_t l, std::span<const Monomial> ms)
{
	if (ms.size() != k + l + 1)
		throw std::invalid_argument("jacobiator needs k + l + 1 arguments");
	Rational coeff;
	std::optional<Rational> exponent;
	std::vector<Monomial> inner;
	std::vector<Monomial> outer;
	for (const Unshuffle &u : enumerate_unshuffles(static_cast<unsigned>(l + 1), static_cast<unsigned>(k))) {
		inner.clear();
		for (unsigned v : u.first_block)
			inner.push_back(ms[v - 1]);
		outer.clear();
		outer.push_back(wronskian_monomials_det(inner));
		for (unsigned v : u.second_block)
			outer.push_back(ms[v - 1]);
		Monomial term = wronskian_monomials_det(outer);
		if (term.is_zero())
			continue;
		if (exponent && *exponent != term.exponent())
			throw InternalInconsistencyError("Jacobiator terms with different powers of x");
		exponent = term.exponent();
		coeff += u.sign > 0 ? term.coeff() : -term.coeff();
	}
	return exponent ? Monomial(coeff, *exponent) : Monomial();
}

JacobiatorGridReport verify_jacobiator_grid(std::size_t k, std::size_t l, std::size_t degree_bound,
                                            std::size_t max_tuples)
{
	const std::size_t len = k + l + 1;
	if (multiset_count(len, degree_bound) > max_tuples)
		throw ResourceLimitError("Jacobiator grid too large: " + multiset_count(len, degree_bound).get_str() +
		                         " tuples, cap " + std::to_string(max_tuples));
	JacobiatorGridReport r;
	r.k = k;
	r.l = l;
	r.degree_bound = degree_bound;
	JacobiatorEval eval(k, l);
	std::vector<Poly> fs(len);
	for_each_multiset(len, degree_bound, [&](const std::vector<std::size_t> &degs) {
		for (std::size_t i = 0; i < len; ++i)
			fs[i] = Poly::monomial(Rational(1), degs[i]);
		Poly j = eval(fs);
		++r.tuples_checked;
		if (!j.is_zero())
			r.failures.push_back({degs, j.to_string()});
	});
	return r;
}

Poly KNAlgebra::basis(std::size_t k) const
{
	if (k > n)
		throw std::invalid_argument("basis index out of range");
	return Poly::divided_power(k);
}

std::vector<Rational> KNAlgebra::coordinates(const Poly &p) const
{
	if (!p.is_zero() && p.degree() > Degree::finite(n))
		throw std::invalid_argument("polynomial " + p.to_string() + " is not in k_" + std::to_string(n) + "[x]");
	std::vector<Rational> c(n + 1);
	for (std::size_t j = 0; j <= n; ++j)
		c[j] = p.coeff(j) * Rational(factorial(static_cast<unsigned>(j)));
	return c;
}

Poly KNAlgebra::bracket(std::span<const std::size_t> indices) const
{
	if (indices.size() != n)
		throw std::invalid_argument("the k_N[x] bracket takes exactly N arguments");
	std::vector<Poly> fs;
	for (std::size_t i : indices)
		fs.push_back(basis(i));
	return wronskian(fs);
}

StructureTable structure_constants_kN(std::size_t n)
{
	if (n == 0)
		throw std::invalid_argument("N must be positive");
	KNAlgebra alg{n};
	StructureTable t;
	t.algebra = "kN";
	t.n = n;
	// increasing N-tuples from {0..N} are exactly "all but one index"
	for (std::size_t omit = n + 1; omit-- > 0;) {
		std::vector<std::size_t> idx;
		for (std::size_t j = 0; j <= n; ++j)
			if (j != omit)
				idx.push_back(j);
		std::vector<Rational> c = alg.coordinates(alg.bracket(idx));
		StructureEntry e;
		e.args.assign(idx.begin(), idx.end());
		std::size_t nonzero = 0;
		for (std::size_t j = 0; j <= n; ++j) {
			if (c[j].is_zero())
				continue;
			++nonzero;
			if (!c[j].is_integer())
				throw InternalInconsistencyError("non-integral structure constant");
			e.result = static_cast<long>(j);
			e.coeff = c[j].numerator();
		}
		if (nonzero > 1)
			throw InternalInconsistencyError("bracket is not a multiple of one basis element");
		if (nonzero == 0)
			e.coeff = 0;
		t.entries.push_back(std::move(e));
	}
	return t;
}

JacobiKNReport verify_jacobi_kN(std::size_t n, std::size_t max_n)
{
	if (n == 0 || n % 2 != 0)
		throw std::invalid_argument("the k_N[x] Jacobi check needs even N");
	if (n > max_n)
		throw ResourceLimitError("k_N[x] Jacobi check capped at N = " + std::to_string(max_n));
	KNAlgebra alg{n};
	JacobiKNReport r;
	r.n = n;
	const std::size_t len = 2 * n - 1;
	JacobiatorEval eval(n - 1, n - 1);
	std::vector<Poly> fs(len);
	for_each_multiset(len, n, [&](const std::vector<std::size_t> &idx) {
		for (std::size_t i = 0; i < len; ++i)
			fs[i] = alg.basis(idx[i]);
		Poly j = eval(fs);
		++r.tuples_checked;
		if (!j.is_zero())
			r.failures.push_back({idx, j.to_string()});
	});
	return r;
}

bool Sl2Report::passed() const
{
	for (const auto &rel : relations)
		if (!rel.holds)
			return false;
	return !relations.empty();
}

Sl2Report verify_sl2()
{
	Sl2Report r;
	r.e = Poly(1);
	r.h = Poly::monomial(Rational(-2), 1);
	r.f = Poly::monomial(Rational(-1), 2);
	auto bracket = [](const Poly &a, const Poly &b) {
		std::vector<Poly> v{a, b};
		return wronskian(v);
	};
	auto add = [&](std::string name, const Poly &a, const Poly &b, const Poly &expected) {
		Sl2Relation rel;
		rel.name = std::move(name);
		rel.bracket = bracket(a, b);
		rel.expected = expected;
		rel.holds = rel.bracket == rel.expected;
		r.relations.push_back(std::move(rel));
	};
	add("[h,e] = 2e", r.h, r.e, Rational(2) * r.e);
	add("[h,f] = -2f", r.h, r.f, Rational(-2) * r.f);
	add("[e,f] = h", r.e, r.f, r.h);
	return r;
}

Rational WittGenerator::exponent() const
{
	return Rational(index) + Rational(static_cast<long>(arity), 2);
}

WittBracket witt_bracket(std::size_t n, std::span<const long> indices)
{
	if (indices.size() != n)
		throw std::invalid_argument("the Witt N-ary bracket takes exactly N indices");
	std::vector<Rational> nus;
	long sum = 0;
	for (long i : indices) {
		nus.push_back(WittGenerator{i, n}.exponent());
		sum += i;
	}
	Monomial m = vandermonde_closed_form(nus);
	WittBracket b;
	b.result_index = sum;
	if (m.is_zero()) {
		b.coeff = 0;
		return b;
	}
	if (m.exponent() != WittGenerator{sum, n}.exponent())
		throw InternalInconsistencyError("Witt bracket lands on x^" + m.exponent().to_string() + ", not on a_" +
		                                 std::to_string(sum));
	if (!m.coeff().is_integer())
		throw InternalInconsistencyError("non-integral Witt structure constant");
	b.coeff = m.coeff().numerator();
	return b;
}

StructureTable witt_table(std::size_t n, long lo, long hi, std::size_t max_entries)
{
	if (n == 0)
		throw std::invalid_argument("N must be positive");
	if (hi < lo)
		throw std::invalid_argument("empty index range");
	std::size_t width = static_cast<std::size_t>(hi - lo + 1);
	if (n > width)
		return StructureTable{"witt", n, {}};
	if (binomial(static_cast<unsigned>(width), static_cast<unsigned>(n)) > max_entries)
		throw ResourceLimitError("Witt table would have " +
		                         binomial(static_cast<unsigned>(width), static_cast<unsigned>(n)).get_str() +
		                         " entries, cap " + std::to_string(max_entries));
	StructureTable t;
	t.algebra = "witt";
	t.n = n;
	std::vector<long> idx(n);
	for (std::size_t i = 0; i < n; ++i)
		idx[i] = lo + static_cast<long>(i);
	for (;;) {
		WittBracket b = witt_bracket(n, idx);
		t.entries.push_back({idx, b.result_index, b.coeff});
		std::size_t i = n;
		while (i > 0 && idx[i - 1] == hi - static_cast<long>(n - i))
			--i;
		if (i == 0)
			break;
		++idx[i - 1];
		for (std::size_t j = i; j < n; ++j)
			idx[j] = idx[j - 1] + 1;
	}
	return t;
}

TranslationReport verify_translation_invariance(std::size_t n, std::span<const long> indices, const Rational &shift)
{
	if (indices.size() != n)
		throw std::invalid_argument("expected N indices");
	TranslationReport r;
	r.n = n;
	r.indices.assign(indices.begin(), indices.end());
	r.shift = shift;
	std::vector<Rational> plain;
	std::vector<Rational> moved;
	std::vector<Monomial> plain_m;
	std::vector<Monomial> moved_m;
	for (long i : indices) {
		plain.emplace_back(i);
		moved.push_back(Rational(i) + shift);
		plain_m.push_back(Monomial::power(plain.back()));
		moved_m.push_back(Monomial::power(moved.back()));
	}
	r.closed_unshifted = vandermonde_closed_form(plain).coeff();
	r.closed_shifted = vandermonde_closed_form(moved).coeff();
	r.det_unshifted = wronskian_monomials_det(plain_m).coeff();
	r.det_shifted = wronskian_monomials_det(moved_m).coeff();
	r.equal = r.closed_unshifted == r.closed_shifted && r.closed_unshifted == r.det_unshifted &&
	          r.closed_unshifted == r.det_shifted;
	return r;
}

} // namespace wronsk
