#include "term_parser.hpp"

#include "wronsk/errors.hpp"

#include <cctype>
#include <string>

namespace wronsk::detail {
namespace {

const Integer kMaxExponent = 100000;

void add_into(TermMap &acc, const Rational &exponent, const Rational &coeff)
{
	if (coeff.is_zero())
		return;
	auto [it, inserted] = acc.try_emplace(exponent, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second.is_zero())
			acc.erase(it);
	}
}

TermMap multiply(const TermMap &a, const TermMap &b)
{
	TermMap r;
	for (const auto &[ea, ca] : a)
		for (const auto &[eb, cb] : b)
			add_into(r, ea + eb, ca * cb);
	return r;
}

class Reader {
public:
	Reader(std::string_view text, char variable) : text_(text), var_(variable) {}

	TermMap run()
	{
		skip_ws();
		if (at_end())
			throw ParseError(pos_, "empty expression");
		TermMap r = expr();
		skip_ws();
		if (!at_end())
			throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
		return r;
	}

private:
	bool at_end() const { return pos_ >= text_.size(); }
	char peek() const { return at_end() ? '\0' : text_[pos_]; }
	void skip_ws()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}
	bool accept(char c)
	{
		skip_ws();
		if (peek() == c) {
			++pos_;
			return true;
		}
		return false;
	}
	void expect(char c)
	{
		if (!accept(c))
			throw ParseError(pos_, std::string("expected '") + c + "'");
	}

	Integer integer()
	{
		skip_ws();
		std::size_t start = pos_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (start == pos_)
			throw ParseError(pos_, "expected integer");
		return Integer(std::string(text_.substr(start, pos_ - start)));
	}

	TermMap expr()
	{
		TermMap acc;
		skip_ws();
		bool negate = false;
		if (accept('-'))
			negate = true;
		else
			accept('+');
		for (;;) {
			TermMap t = term();
			for (const auto &[e, c] : t)
				add_into(acc, e, negate ? -c : c);
			if (accept('+'))
				negate = false;
			else if (accept('-'))
				negate = true;
			else
				return acc;
		}
	}

	TermMap term()
	{
		TermMap acc = factor();
		for (;;) {
			if (accept('*')) {
				acc = multiply(acc, factor());
			} else if (accept('/')) {
				std::size_t at = pos_;
				TermMap d = factor();
				if (d.size() != 1 || !d.begin()->first.is_zero())
					throw ParseError(at, "division only by a nonzero constant");
				Rational inv = Rational(1) / d.begin()->second;
				for (auto &[e, c] : acc)
					c *= inv;
			} else {
				return acc;
			}
		}
	}

	TermMap factor()
	{
		TermMap base = atom();
		if (!accept('^'))
			return base;
		std::size_t exp_at = pos_;
		Rational e = exponent();
		if (abs(e.numerator()) > kMaxExponent)
			throw ParseError(exp_at, "exponent too large");
		if (base.size() == 1) {
			auto [be, bc] = *base.begin();
			if (e.is_integer() || bc.is_one()) {
				if (!e.is_integer())
					return TermMap{{be * e, bc}};
				Integer n = e.numerator();
				bool inv = n < 0;
				if (inv)
					n = -n;
				Rational c(1);
				for (Integer i = 0; i < n; ++i)
					c *= bc;
				if (inv)
					c = Rational(1) / c;
				return TermMap{{be * e, c}};
			}
			throw ParseError(exp_at, "rational power of a term with non-unit coefficient");
		}
		if (!e.is_integer() || e.sign() < 0)
			throw ParseError(exp_at, "only nonnegative integer powers of a sum");
		if (base.empty())
			return e.is_zero() ? TermMap{{Rational(0), Rational(1)}} : TermMap{};
		TermMap r{{Rational(0), Rational(1)}};
		for (Integer i = 0; i < e.numerator(); ++i)
			r = multiply(r, base);
		return r;
	}

	TermMap atom()
	{
		skip_ws();
		char c = peek();
		if (c == '(') {
			++pos_;
			TermMap r = expr();
			expect(')');
			return r;
		}
		if (c == var_) {
			++pos_;
			return TermMap{{Rational(1), Rational(1)}};
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			Integer n = integer();
			if (n == 0)
				return TermMap{};
			return TermMap{{Rational(0), Rational(n)}};
		}
		if (at_end())
			throw ParseError(pos_, "unexpected end of input");
		throw ParseError(pos_, std::string("unexpected character '") + c + "'");
	}

	Rational exponent()
	{
		skip_ws();
		if (accept('(')) {
			bool neg = accept('-');
			Integer num = integer();
			Integer den = 1;
			if (accept('/')) {
				std::size_t at = pos_;
				den = integer();
				if (den == 0)
					throw ParseError(at, "zero denominator in exponent");
			}
			expect(')');
			return Rational(neg ? Integer(-num) : num, den);
		}
		bool neg = accept('-');
		Integer n = integer();
		return Rational(neg ? Integer(-n) : n);
	}

	std::string_view text_;
	char var_;
	std::size_t pos_ = 0;
};

} // namespace

TermMap parse_terms(std::string_view text, char variable)
{
	return Reader(text, variable).run();
}

} // namespace wronsk::detail

namespace wronsk::detail {

void append_term(std::string &out, const Rational &coeff, const std::string &power)
{
	bool negative = coeff.sign() < 0;
	if (out.empty())
		out += negative ? "-" : "";
	else
		out += negative ? " - " : " + ";
	Rational mag = negative ? -coeff : coeff;
	Integer num = mag.numerator();
	Integer den = mag.denominator();
	if (power.empty()) {
		out += mag.to_string();
	} else if (mag.is_one()) {
		out += power;
	} else if (num == 1) {
		out += power + "/" + den.get_str();
	} else {
		out += mag.to_string() + "*" + power;
	}
}

} // namespace wronsk::detail
