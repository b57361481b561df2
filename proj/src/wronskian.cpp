#include "wronsk/wronskian.hpp"

#include "wronsk/errors.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace wronsk {

WronskianSpec WronskianSpec::contiguous(std::size_t n)
{
	WronskianSpec s;
	for (std::size_t i = 0; i < n; ++i)
		s.orders.push_back(i);
	return s;
}

bool WronskianSpec::is_contiguous() const
{
	for (std::size_t i = 0; i < orders.size(); ++i)
		if (orders[i] != i)
			return false;
	return true;
}

Matrix<Poly> wronskian_matrix(std::span<const Poly> fs, const WronskianSpec &spec)
{
	if (spec.orders.size() != fs.size())
		throw std::invalid_argument("Wronskian needs as many derivative orders as arguments");
	for (std::size_t i = 1; i < spec.orders.size(); ++i)
		if (spec.orders[i] <= spec.orders[i - 1])
			throw std::invalid_argument("derivative orders must be strictly increasing");
	Matrix<Poly> m(fs.size(), std::vector<Poly>(fs.size()));
	for (std::size_t j = 0; j < fs.size(); ++j) {
		// successive derivatives of one column
		Poly d = fs[j];
		std::size_t at = 0;
		for (std::size_t i = 0; i < fs.size(); ++i) {
			d = derivative(d, spec.orders[i] - at);
			at = spec.orders[i];
			m[i][j] = d;
		}
	}
	return m;
}

Poly det_bareiss(Matrix<Poly> m)
{
	const std::size_t n = m.size();
	if (n == 0)
		return Poly(1);
	int sign = 1;
	Poly prev(1);
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (m[k][k].is_zero()) {
			std::size_t pivot = k + 1;
			while (pivot < n && m[pivot][k].is_zero())
				++pivot;
			if (pivot == n)
				return Poly();
			std::swap(m[k], m[pivot]);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i) {
			for (std::size_t j = k + 1; j < n; ++j) {
				Poly num = m[i][j] * m[k][k];
				if (!m[i][k].is_zero())
					num -= m[i][k] * m[k][j];
				m[i][j] = num.is_zero() || prev.is_one() ? std::move(num) : divide_exact(num, prev);
			}
			m[i][k] = Poly();
		}
		prev = m[k][k];
	}
	return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Poly wronskian(std::span<const Poly> fs)
{
	return det_bareiss(wronskian_matrix(fs, WronskianSpec::contiguous(fs.size())));
}

Poly wronskian(std::span<const Poly> fs, const WronskianSpec &spec)
{
	return det_bareiss(wronskian_matrix(fs, spec));
}

Monomial wronskian_monomials_det(std::span<const Monomial> ms)
{
	const std::size_t n = ms.size();
	Matrix<Monomial> m(n, std::vector<Monomial>(n));
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t i = 0; i < n; ++i)
			m[i][j] = derivative(ms[j], i);

	// every nonzero term carries the same power of x
	Rational coeff;
	std::optional<Rational> exponent;
	for_each_leibniz_term(m, Monomial(Rational(1), Rational(0)), [&](int sign, const Monomial &t) {
		if (exponent && *exponent != t.exponent())
			throw InternalInconsistencyError("Wronskian of monomials mixes powers " + exponent->to_string() +
			                                 " and " + t.exponent().to_string());
		exponent = t.exponent();
		coeff += sign > 0 ? t.coeff() : -t.coeff();
	});
	return exponent ? Monomial(coeff, *exponent) : Monomial();
}

Monomial vandermonde_closed_form(std::span<const Rational> nus)
{
	const std::size_t n = nus.size();
	Rational coeff(1);
	Rational total;
	for (std::size_t i = 0; i < n; ++i) {
		total += nus[i];
		for (std::size_t j = i + 1; j < n; ++j)
			coeff *= nus[j] - nus[i];
	}
	Rational shift(static_cast<long>(n * (n - 1) / 2));
	return Monomial(coeff, total - shift);
}

Poly basis_wronskian(std::size_t n, std::size_t k)
{
	if (k > n)
		throw std::invalid_argument("omitted index must lie in 0..N");
	std::vector<Poly> fs;
	for (std::size_t j = 0; j <= n; ++j)
		if (j != k)
			fs.push_back(Poly::divided_power(j));
	Poly w = wronskian(fs);
	Poly expected = Poly::divided_power(n - k);
	if (w != expected)
		throw InternalInconsistencyError("basis Wronskian N=" + std::to_string(n) + ", k=" + std::to_string(k) +
		                                 " gave " + w.to_string() + ", expected " + expected.to_string());
	return w;
}

Poly wm_recurrence(std::size_t m)
{
	static std::mutex mu;
	static std::vector<Poly> memo{Poly(1)};

	std::lock_guard lock(mu);
	while (memo.size() <= m) {
		std::size_t q = memo.size();
		Poly w;
		for (std::size_t l = 1; l < q; ++l) {
			Poly term = memo[q - l] * Poly::divided_power(l);
			if (l % 2 == 0)
				term = -term;
			w += term;
		}
		Poly last = Poly::divided_power(q);
		// - (-1)^q x^q/q!
		if (q % 2 == 0)
			w -= last;
		else
			w += last;
		memo.push_back(std::move(w));
	}
	return memo[m];
}

Poly wm_direct(std::size_t m)
{
	std::vector<Poly> fs;
	for (std::size_t j = 1; j <= m; ++j)
		fs.push_back(Poly::divided_power(j));
	return wronskian(fs);
}

GeneratingFunctionReport verify_generating_function(std::size_t max_m)
{
	GeneratingFunctionReport r;
	r.max_m = max_m;
	r.passed = true;
	for (std::size_t m = 1; m <= max_m; ++m) {
		GeneratingFunctionEntry e;
		e.m = m;
		e.by_recurrence = wm_recurrence(m);
		e.by_determinant = wm_direct(m);
		e.expected = Poly::divided_power(m);
		e.equal = e.by_recurrence == e.expected && e.by_determinant == e.expected;
		r.passed = r.passed && e.equal;
		r.partial_sum += e.by_recurrence;
		r.exp_minus_one += e.expected;
		r.entries.push_back(std::move(e));
	}

	// Summing the recurrence over m: f = f (1 - exp(-x)) - exp(-x) + 1.
	Poly exp_neg;
	for (std::size_t j = 0; j <= max_m; ++j) {
		Poly t = Poly::divided_power(j);
		exp_neg += j % 2 ? -t : t;
	}
	Poly rhs = r.partial_sum * (Poly(1) - exp_neg) - exp_neg + Poly(1);
	std::vector<Rational> trunc(rhs.coeffs().begin(),
	                            rhs.coeffs().begin() + std::min(rhs.coeffs().size(), max_m + 1));
	r.functional_equation = Poly(std::move(trunc)) == r.partial_sum;
	r.passed = r.passed && r.functional_equation && r.partial_sum == r.exp_minus_one;
	return r;
}

FactorizationReport verify_factorization_eq10(std::size_t n, std::size_t k)
{
	if (k > n)
		throw std::invalid_argument("omitted index must lie in 0..N");
	FactorizationReport r;
	r.n = n;
	r.k = k;
	std::vector<Poly> full;
	std::vector<Poly> first;
	std::vector<Poly> second;
	for (std::size_t j = 0; j <= n; ++j) {
		if (j == k)
			continue;
		full.push_back(Poly::divided_power(j));
		if (j < k)
			first.push_back(Poly::divided_power(j));
	}
	for (std::size_t j = 1; j <= n - k; ++j)
		second.push_back(Poly::divided_power(j));
	r.full = wronskian(full);
	r.first = wronskian(first);
	r.second = wronskian(second);
	r.first_is_one = r.first == Poly(1);
	r.product_matches = r.full == r.first * r.second;
	r.matches_recurrence = r.full == wm_recurrence(n - k);
	r.passed = r.first_is_one && r.product_matches && r.matches_recurrence;
	return r;
}

} // namespace wronsk
