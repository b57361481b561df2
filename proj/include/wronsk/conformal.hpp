#pragma once

#include "poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wronsk {

/// y = y(x), a polynomial of degree >= 1.
class CoordinateChange {
public:
	/// Throws std::invalid_argument when y is constant.
	explicit CoordinateChange(Poly y_of_x);

	const Poly &y_of_x() const { return y_; }
	Poly dy_dx() const { return derivative(y_); }

private:
	Poly y_;
};

/// N(N-1)/2
std::size_t conformal_weight(std::size_t n);

struct ConformalReport {
	std::size_t n = 0;
	std::size_t weight = 0;
	std::vector<Poly> phis; // functions of y
	Poly change;            // y(x)
	Poly lhs;               // W_x(phi_i(y(x)))
	Poly rhs;               // (dy/dx)^weight * W_y(phi_i)(y(x))
	bool equal = false;
};

/// Compares both sides of the Wronskian transformation law with the
/// exponent `weight` on dy/dx.
ConformalReport conformal_law_with_weight(std::span<const Poly> phis, const CoordinateChange &change,
                                          std::size_t weight);

/// The law with weight conformal_weight(N).
ConformalReport verify_conformal_law(std::span<const Poly> phis, const CoordinateChange &change);

} // namespace wronsk
