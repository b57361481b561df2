#pragma once

#include "determinant.hpp"
#include "monomial.hpp"
#include "poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wronsk {

/// Derivative orders of the rows, strictly increasing. The brackets use the
/// contiguous range 0..N-1.
struct WronskianSpec {
	std::vector<std::size_t> orders;

	static WronskianSpec contiguous(std::size_t n);
	bool is_contiguous() const;
};

/// Entry (i, j) is the orders[i]-th derivative of fs[j].
Matrix<Poly> wronskian_matrix(std::span<const Poly> fs, const WronskianSpec &spec);

/// Fraction-free Bareiss elimination over Q[x] with row pivoting.
/// The empty matrix has determinant 1.
Poly det_bareiss(Matrix<Poly> m);

/// W^{0,1,...,N-1}(f_1, ..., f_N); the empty Wronskian is 1.
Poly wronskian(std::span<const Poly> fs);
Poly wronskian(std::span<const Poly> fs, const WronskianSpec &spec);

/// Wronskian of single-term functions c_j x^{nu_j}, expanded directly by
/// minors over the monomial calculus.
Monomial wronskian_monomials_det(std::span<const Monomial> ms);

/// prod_{i<j} (nu_j - nu_i) * x^{sum nu - N(N-1)/2}
Monomial vandermonde_closed_form(std::span<const Rational> nus);

/// W(1, x, ..., x^N/N!) with x^k/k! left out. Throws
/// InternalInconsistencyError unless the result is x^{N-k}/(N-k)!.
Poly basis_wronskian(std::size_t n, std::size_t k);

/// W_m = sum_{l=1}^{m-1} W_{m-l} (-1)^{l+1} x^l/l! - (-1)^m x^m/m!, W_0 = 1.
/// Memoized; safe to call concurrently.
Poly wm_recurrence(std::size_t m);

/// W(x, x^2/2!, ..., x^m/m!) by determinant; W_0 = 1.
Poly wm_direct(std::size_t m);

struct GeneratingFunctionEntry {
	std::size_t m = 0;
	Poly by_recurrence;
	Poly by_determinant;
	Poly expected; // x^m/m!
	bool equal = false;
};

struct GeneratingFunctionReport {
	std::size_t max_m = 0;
	std::vector<GeneratingFunctionEntry> entries;
	Poly partial_sum;    // sum_{m<=M} W_m
	Poly exp_minus_one;  // truncation of exp(x) - 1 at degree M
	/// f = f (1 - exp(-x)) - exp(-x) + 1 modulo x^{M+1}, f the partial sum;
	/// this is the recurrence summed over m, solved by f = exp(x) - 1
	bool functional_equation = false;
	bool passed = false;
};

GeneratingFunctionReport verify_generating_function(std::size_t max_m);

struct FactorizationReport {
	std::size_t n = 0;
	std::size_t k = 0;
	Poly full;   // W of the basis with x^k/k! left out
	Poly first;  // W(1, ..., x^{k-1}/(k-1)!)
	Poly second; // W(x, ..., x^{N-k}/(N-k)!)
	bool first_is_one = false;
	bool product_matches = false;
	bool matches_recurrence = false; // full == W_{N-k}
	bool passed = false;
};

FactorizationReport verify_factorization_eq10(std::size_t n, std::size_t k);

} // namespace wronsk
