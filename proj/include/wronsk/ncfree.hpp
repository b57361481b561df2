#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wronsk {

/// Word in the generators a_1, a_2, ... (1-based letters).
using Word = std::vector<unsigned>;

/// Element of the free associative algebra over the integers, kept in
/// normal form: lexicographically ordered words, no zero coefficients.
class NCPoly {
public:
	NCPoly() = default;

	static NCPoly one() { return from_word({}); }
	static NCPoly generator(unsigned i) { return from_word({i}); }
	static NCPoly from_word(Word w, const Integer &c = 1);

	const std::map<Word, Integer> &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const Word &w, const Integer &c);
	/// this += c * other
	void add_scaled(const NCPoly &other, const Integer &c);

	NCPoly operator-() const;
	NCPoly &operator+=(const NCPoly &o)
	{
		add_scaled(o, 1);
		return *this;
	}
	NCPoly &operator-=(const NCPoly &o)
	{
		add_scaled(o, -1);
		return *this;
	}
	friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
	friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
	friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
	friend NCPoly operator*(const Integer &c, const NCPoly &a);
	friend bool operator==(const NCPoly &, const NCPoly &) = default;

	/// "a1a2 - a2a1"; "1" for the empty word.
	std::string to_string() const;

private:
	std::map<Word, Integer> terms_;
};

/// Sum over sigma in S_N of sign(sigma) args[sigma(1)] ... args[sigma(N)].
NCPoly alt_composition(std::span<const NCPoly> args);

/// Delta_N(a_1, ..., a_N) on distinct generators.
NCPoly alt_generators(unsigned n);

/// Delta_outer[Delta_inner](a_1, ..., a_{outer+inner-1}) summed over
/// (inner, outer-1)-unshuffles, inner bracket in the first outer slot.
NCPoly nested_alt(unsigned outer, unsigned inner);

/// c with a == c * b, if any (b nonzero).
std::optional<Rational> proportionality(const NCPoly &a, const NCPoly &b);

enum class Table6Case { even_even, odd_even, odd_inner };

/// Which identity covers Delta_outer[Delta_inner], if any.
std::optional<Table6Case> classify_table6(unsigned outer, unsigned inner);
std::string case_label(Table6Case c);

struct Table6Entry {
	unsigned outer = 0;
	unsigned inner = 0;
	Table6Case identity = Table6Case::even_even;
	Integer expected_coeff; // lhs predicted as expected_coeff * Delta_{outer+inner-1}
	std::size_t lhs_terms = 0;
	std::size_t rhs_terms = 0;
	std::optional<Rational> measured_coeff;
	bool equal = false;
	bool equal_up_to_sign = false;
	int sign = 0;           // +1 equal, -1 equal after negation, 0 neither
	NCPoly difference;      // lhs - rhs when not equal
};

struct Table6Report {
	std::vector<Table6Entry> entries;
	bool all_equal() const;
	bool all_equal_up_to_sign() const;
};

/// Checks every covered pair 1 <= outer <= outer_max, 2 <= inner <= inner_max.
/// Throws ResourceLimitError when outer_max + inner_max - 1 > max_args.
Table6Report verify_table6(unsigned outer_max, unsigned inner_max, unsigned max_args = 8);

} // namespace wronsk
