#include "wronsk/diffop.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/permutations.hpp"
#include "wronsk/wronskian.hpp"

#include <stdexcept>

namespace wronsk {

DiffOp::DiffOp(const Poly &c, std::size_t order) { add(order, c); }

void DiffOp::add(std::size_t order, const Poly &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = coeffs_.try_emplace(order, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			coeffs_.erase(it);
	}
}

Degree DiffOp::order() const
{
	return coeffs_.empty() ? Degree::minus_infinity() : Degree::finite(coeffs_.rbegin()->first);
}

std::optional<std::size_t> DiffOp::pure_order() const
{
	if (coeffs_.size() != 1)
		return std::nullopt;
	return coeffs_.begin()->first;
}

Poly DiffOp::coeff(std::size_t order) const
{
	auto it = coeffs_.find(order);
	return it == coeffs_.end() ? Poly() : it->second;
}

DiffOp &DiffOp::operator+=(const DiffOp &o)
{
	for (const auto &[j, c] : o.coeffs_)
		add(j, c);
	return *this;
}

DiffOp &DiffOp::operator-=(const DiffOp &o)
{
	for (const auto &[j, c] : o.coeffs_)
		add(j, -c);
	return *this;
}

DiffOp &DiffOp::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	for (auto &[j, p] : coeffs_)
		p *= c;
	return *this;
}

std::string DiffOp::to_string() const
{
	if (coeffs_.empty())
		return "0";
	std::string out;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
		const auto &[j, c] = *it;
		std::string body = c.to_string();
		// terms are joined by " + " or " - "
		bool compound = body.find(' ') != std::string::npos;
		std::string d = j == 0 ? "" : (j == 1 ? "D" : "D^" + std::to_string(j));
		std::string term;
		if (d.empty())
			term = compound ? "(" + body + ")" : body;
		else if (body == "1")
			term = d;
		else if (body == "-1")
			term = "-" + d;
		else
			term = (compound ? "(" + body + ")" : body) + "*" + d;
		if (out.empty()) {
			out = term;
		} else if (term[0] == '-') {
			out += " - " + term.substr(1);
		} else {
			out += " + " + term;
		}
	}
	return out;
}

DiffOp compose(const DiffOp &a, const DiffOp &b)
{
	DiffOp r;
	for (const auto &[p, ca] : a.coeffs()) {
		for (const auto &[q, cb] : b.coeffs()) {
			// (a D^p) o (b D^q) = sum_s binom(p,s) a b^(s) D^(p+q-s)
			for (std::size_t s = 0; s <= p; ++s) {
				Poly ds = derivative(cb, s);
				if (ds.is_zero())
					break;
				Poly term = ca * ds;
				term *= Rational(binomial(static_cast<unsigned>(p), static_cast<unsigned>(s)));
				r += DiffOp(term, p + q - s);
			}
		}
	}
	return r;
}

Poly apply(const DiffOp &a, const Poly &f)
{
	Poly r;
	for (const auto &[j, c] : a.coeffs())
		r += c * derivative(f, j);
	return r;
}

DiffOp alt_compose_ops(std::span<const DiffOp> ops, std::size_t max_args)
{
	if (ops.empty())
		throw std::invalid_argument("alt_compose_ops needs at least one operator");
	if (ops.size() > max_args)
		throw ResourceLimitError("alternated composition of " + std::to_string(ops.size()) +
		                         " operators exceeds the cap of " + std::to_string(max_args));
	DiffOp acc;
	for_each_signed_product(
	    ops, DiffOp::identity(), [](const DiffOp &a, const DiffOp &b) { return compose(a, b); },
	    [&](int sign, const DiffOp &prod) { acc += Rational(sign) * prod; });
	return acc;
}

Theorem1Report verify_theorem1(std::size_t p, std::span<const Poly> ws, std::size_t max_args)
{
	if (p == 0 || ws.size() != 2 * p)
		throw std::invalid_argument("need exactly 2p coefficient polynomials with p >= 1");
	for (const Poly &w : ws)
		if (w.is_zero())
			throw std::invalid_argument("coefficients must be nonzero");
	std::vector<DiffOp> ops;
	for (const Poly &w : ws)
		ops.emplace_back(w, p);
	Theorem1Report r;
	r.p = p;
	r.n = ws.size();
	r.lhs = alt_compose_ops(ops, max_args);
	r.rhs = DiffOp(wronskian(ws), p);
	r.equal = r.lhs == r.rhs;
	if (!r.rhs.is_zero()) {
		const Poly &w = r.rhs.coeff(p);
		Rational c = r.lhs.coeff(p).coeff(w.coeffs().size() - 1) / w.leading();
		if (r.lhs == c * r.rhs)
			r.ratio = c;
	}
	return r;
}

} // namespace wronsk
