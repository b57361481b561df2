#include "wronsk/ncfree.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/permutations.hpp"

#include <stdexcept>

namespace wronsk {

NCPoly NCPoly::from_word(Word w, const Integer &c)
{
	NCPoly p;
	p.add_term(w, c);
	return p;
}

void NCPoly::add_term(const Word &w, const Integer &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void NCPoly::add_scaled(const NCPoly &other, const Integer &c)
{
	if (c == 0)
		return;
	for (const auto &[w, x] : other.terms_)
		add_term(w, c * x);
}

NCPoly NCPoly::operator-() const
{
	NCPoly r = *this;
	for (auto &[w, c] : r.terms_)
		c = -c;
	return r;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b)
{
	NCPoly r;
	Word w;
	for (const auto &[wa, ca] : a.terms_) {
		for (const auto &[wb, cb] : b.terms_) {
			w.assign(wa.begin(), wa.end());
			w.insert(w.end(), wb.begin(), wb.end());
			r.add_term(w, ca * cb);
		}
	}
	return r;
}

NCPoly operator*(const Integer &c, const NCPoly &a)
{
	NCPoly r;
	r.add_scaled(a, c);
	return r;
}

std::string NCPoly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto &[w, c] : terms_) {
		bool neg = c < 0;
		Integer mag = neg ? Integer(-c) : c;
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		if (mag != 1 || w.empty())
			out += mag.get_str();
		if (mag != 1 && !w.empty())
			out += "*";
		for (unsigned letter : w)
			out += "a" + std::to_string(letter);
	}
	return out;
}

NCPoly alt_composition(std::span<const NCPoly> args)
{
	if (args.empty())
		throw std::invalid_argument("alt_composition needs at least one argument");
	NCPoly acc;
	for_each_signed_product(
	    args, NCPoly::one(), [](const NCPoly &a, const NCPoly &b) { return a * b; },
	    [&](int sign, const NCPoly &prod) { acc.add_scaled(prod, sign); });
	return acc;
}

NCPoly alt_generators(unsigned n)
{
	std::vector<NCPoly> gens;
	for (unsigned i = 1; i <= n; ++i)
		gens.push_back(NCPoly::generator(i));
	return alt_composition(gens);
}

NCPoly nested_alt(unsigned outer, unsigned inner)
{
	if (outer == 0 || inner == 0)
		throw std::invalid_argument("bracket arities must be positive");
	NCPoly acc;
	std::vector<NCPoly> inner_args;
	std::vector<NCPoly> outer_args;
	for (const Unshuffle &u : enumerate_unshuffles(inner, outer - 1)) {
		inner_args.clear();
		for (unsigned v : u.first_block)
			inner_args.push_back(NCPoly::generator(v));
		outer_args.clear();
		outer_args.push_back(alt_composition(inner_args));
		for (unsigned v : u.second_block)
			outer_args.push_back(NCPoly::generator(v));
		acc.add_scaled(alt_composition(outer_args), u.sign);
	}
	return acc;
}

std::optional<Rational> proportionality(const NCPoly &a, const NCPoly &b)
{
	if (b.is_zero())
		return a.is_zero() ? std::optional<Rational>(Rational()) : std::nullopt;
	const auto &[w0, c0] = *b.terms().begin();
	auto it = a.terms().find(w0);
	Rational ratio = it == a.terms().end() ? Rational() : Rational(it->second, c0);
	for (const auto &[w, c] : b.terms()) {
		auto ia = a.terms().find(w);
		Rational ca = ia == a.terms().end() ? Rational() : Rational(ia->second);
		if (ca != ratio * Rational(c))
			return std::nullopt;
	}
	// a must not carry words absent from b
	for (const auto &[w, c] : a.terms())
		if (!b.terms().contains(w))
			return std::nullopt;
	return ratio;
}

std::optional<Table6Case> classify_table6(unsigned outer, unsigned inner)
{
	if (outer == 0 || inner < 2)
		return std::nullopt;
	if (inner % 2 == 1)
		return Table6Case::odd_inner;
	if (outer % 2 == 0)
		return Table6Case::even_even;
	if (outer >= 3)
		return Table6Case::odd_even;
	return std::nullopt;
}

std::string case_label(Table6Case c)
{
	switch (c) {
	case Table6Case::even_even:
		return "6a";
	case Table6Case::odd_even:
		return "6b";
	case Table6Case::odd_inner:
		return "6c";
	}
	return "?";
}

bool Table6Report::all_equal() const
{
	for (const auto &e : entries)
		if (!e.equal)
			return false;
	return true;
}

bool Table6Report::all_equal_up_to_sign() const
{
	for (const auto &e : entries)
		if (!e.equal_up_to_sign)
			return false;
	return true;
}

Table6Report verify_table6(unsigned outer_max, unsigned inner_max, unsigned max_args)
{
	if (outer_max + inner_max - 1 > max_args)
		throw ResourceLimitError("Delta_" + std::to_string(outer_max) + "[Delta_" + std::to_string(inner_max) +
		                         "] needs " + std::to_string(outer_max + inner_max - 1) +
		                         " arguments; cap is " + std::to_string(max_args));
	Table6Report report;
	for (unsigned outer = 1; outer <= outer_max; ++outer) {
		for (unsigned inner = 2; inner <= inner_max; ++inner) {
			auto identity = classify_table6(outer, inner);
			if (!identity)
				continue;
			Table6Entry e;
			e.outer = outer;
			e.inner = inner;
			e.identity = *identity;
			switch (*identity) {
			case Table6Case::even_even:
				e.expected_coeff = 0;
				break;
			case Table6Case::odd_even:
				e.expected_coeff = 1;
				break;
			case Table6Case::odd_inner:
				e.expected_coeff = outer;
				break;
			}
			NCPoly lhs = nested_alt(outer, inner);
			NCPoly delta = alt_generators(outer + inner - 1);
			NCPoly rhs = e.expected_coeff * delta;
			e.lhs_terms = lhs.size();
			e.rhs_terms = rhs.size();
			e.measured_coeff = proportionality(lhs, delta);
			e.equal = lhs == rhs;
			if (e.equal) {
				e.sign = 1;
			} else if (lhs == -rhs) {
				e.sign = -1;
			}
			e.equal_up_to_sign = e.sign != 0;
			if (!e.equal)
				e.difference = lhs - rhs;
			report.entries.push_back(std::move(e));
		}
	}
	return report;
}

} // namespace wronsk
