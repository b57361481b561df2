#pragma once

#include "poly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wronsk {

/// Differential operator sum_j c_j(x) D^j on the affine line, D = d/dx.
/// Stored as order -> nonzero coefficient.
class DiffOp {
public:
	DiffOp() = default;
	/// c(x) D^order
	DiffOp(const Poly &c, std::size_t order);

	static DiffOp identity() { return DiffOp(Poly(1), 0); }

	const std::map<std::size_t, Poly> &coeffs() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	/// Highest order with a nonzero coefficient; minus infinity for zero.
	Degree order() const;
	/// Order p if the operator is c(x) D^p with a single term.
	std::optional<std::size_t> pure_order() const;
	Poly coeff(std::size_t order) const;

	DiffOp &operator+=(const DiffOp &o);
	DiffOp &operator-=(const DiffOp &o);
	DiffOp &operator*=(const Rational &c);
	friend DiffOp operator+(DiffOp a, const DiffOp &b) { return a += b; }
	friend DiffOp operator-(DiffOp a, const DiffOp &b) { return a -= b; }
	friend DiffOp operator*(const Rational &c, DiffOp a) { return a *= c; }
	friend bool operator==(const DiffOp &, const DiffOp &) = default;

	/// "x^2*D^2 + (x + 1)*D + 1" style; "0" for the zero operator.
	std::string to_string() const;

private:
	void add(std::size_t order, const Poly &c);
	std::map<std::size_t, Poly> coeffs_;
};

/// A o B via the Leibniz rule.
DiffOp compose(const DiffOp &a, const DiffOp &b);

/// sum_j c_j(x) f^(j)(x)
Poly apply(const DiffOp &a, const Poly &f);

/// Signed sum of all N! compositions. Throws ResourceLimitError for N > max_args.
DiffOp alt_compose_ops(std::span<const DiffOp> ops, std::size_t max_args = 8);

struct Theorem1Report {
	std::size_t p = 0;
	std::size_t n = 0;
	DiffOp lhs; // alternated composition
	DiffOp rhs; // Wronskian * D^p
	bool equal = false;
	/// c with lhs == c * rhs, when rhs is nonzero and such a constant exists
	std::optional<Rational> ratio;
};

/// Compares the alternated composition of w_j(x) D^p (N = 2p arguments)
/// with W(w_1, ..., w_N) D^p. Throws std::invalid_argument unless
/// ws.size() == 2p and every w_j is nonzero.
Theorem1Report verify_theorem1(std::size_t p, std::span<const Poly> ws, std::size_t max_args = 8);

} // namespace wronsk
