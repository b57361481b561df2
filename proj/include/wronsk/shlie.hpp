#pragma once

#include "monomial.hpp"
#include "permutations.hpp"
#include "poly.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wronsk {

// ---- Jacobiators --------------------------------------------------------

/// sum over (l+1, k)-unshuffles t of sign(t) *
///   W^{0..k}(W^{0..l}(f_t(1), ..., f_t(l+1)), f_t(l+2), ..., f_t(k+l+1)).
/// Note W^{0..k} takes k+1 arguments. Throws std::invalid_argument unless
/// fs.size() == k + l + 1.
Poly jacobiator(std::size_t k, std::size_t l, std::span<const Poly> fs);

/// The same insertion evaluated on single-term functions with rational
/// exponents, through the direct monomial determinant.
Monomial jacobiator_monomials(std::size_t k, std::size_t l, std::span<const Monomial> ms);

struct JacobiatorFailure {
	std::vector<std::size_t> degrees;
	std::string value;
};

struct JacobiatorGridReport {
	std::size_t k = 0;
	std::size_t l = 0;
	std::size_t degree_bound = 0;
	std::size_t tuples_checked = 0;
	std::vector<JacobiatorFailure> failures;
	bool passed() const { return failures.empty(); }
};

/// jacobiator(k, l, x^{d_1}, ..., x^{d_{k+l+1}}) over every nondecreasing
/// degree tuple with entries in 0..degree_bound. Throws ResourceLimitError
/// when the number of tuples exceeds max_tuples.
JacobiatorGridReport verify_jacobiator_grid(std::size_t k, std::size_t l, std::size_t degree_bound,
                                            std::size_t max_tuples = 1'000'000);

// ---- k_N[x] ---------------------------------------------------------------

/// Polynomials of degree <= N with basis x^k/k!, 0 <= k <= N, and the
/// N-ary Wronskian bracket.
struct KNAlgebra {
	std::size_t n = 1;

	std::size_t dimension() const { return n + 1; }
	Poly basis(std::size_t k) const;
	/// Coordinates in the basis; throws std::invalid_argument if deg p > N.
	std::vector<Rational> coordinates(const Poly &p) const;
	/// W^{0..N-1} of the listed basis elements, in the given order.
	Poly bracket(std::span<const std::size_t> indices) const;
};

struct StructureEntry {
	std::vector<long> args;
	long result = 0;
	Integer coeff;
};

/// algebra is "kN" or "witt"; entries sorted lexicographically by args.
struct StructureTable {
	std::string algebra;
	std::size_t n = 0;
	std::vector<StructureEntry> entries;
};

/// Every increasing N-tuple of basis indices of k_N[x]; tuples are evaluated
/// in increasing order.
StructureTable structure_constants_kN(std::size_t n);

struct JacobiKNReport {
	std::size_t n = 0;
	std::size_t tuples_checked = 0;
	std::vector<JacobiatorFailure> failures; // degrees hold basis indices
	bool passed() const { return failures.empty(); }
};

/// The (2N-1)-argument Jacobiator of the N-ary bracket on every
/// nondecreasing tuple of basis elements. Requires even N; throws
/// ResourceLimitError for N > max_n.
JacobiKNReport verify_jacobi_kN(std::size_t n, std::size_t max_n = 4);

// ---- sl(2) ------------------------------------------------------------------

struct Sl2Relation {
	std::string name;  // "[h,e] = 2e"
	Poly bracket;      // W^{0,1} of the two vector-field coefficients
	Poly expected;
	bool holds = false;
};

struct Sl2Report {
	Poly e, h, f; // vector-field coefficients 1, -2x, -x^2
	std::vector<Sl2Relation> relations;
	bool passed() const;
};

Sl2Report verify_sl2();

// ---- Witt deformation ----------------------------------------------------

/// a_i = x^{i + N/2} in the N-ary setting.
struct WittGenerator {
	long index = 0;
	std::size_t arity = 2;

	Rational exponent() const;
	Monomial monomial() const { return Monomial::power(exponent()); }
};

struct WittBracket {
	Integer coeff;    // prod_{p<q} (i_q - i_p)
	long result_index = 0;
};

/// [a_{i_1}, ..., a_{i_N}]_N = coeff * a_{i_1 + ... + i_N}, computed from the
/// Vandermonde closed form. Throws InternalInconsistencyError if the power
/// of x does not land on the generator a_{sum}.
WittBracket witt_bracket(std::size_t n, std::span<const long> indices);

/// Increasing N-tuples from [lo, hi]. Throws ResourceLimitError when more
/// than max_entries tuples would be produced.
StructureTable witt_table(std::size_t n, long lo, long hi, std::size_t max_entries = 100'000);

struct TranslationReport {
	std::size_t n = 0;
	std::vector<long> indices;
	Rational shift;
	Rational closed_unshifted;
	Rational closed_shifted;
	Rational det_unshifted;
	Rational det_shifted;
	bool equal = false;
};

TranslationReport verify_translation_invariance(std::size_t n, std::span<const long> indices, const Rational &shift);

} // namespace wronsk
