#include "wronsk/conformal.hpp"

#include "wronsk/wronskian.hpp"

#include <stdexcept>

namespace wronsk {

CoordinateChange::CoordinateChange(Poly y_of_x) : y_(std::move(y_of_x))
{
	if (derivative(y_).is_zero())
		throw std::invalid_argument("coordinate change must have nonzero dy/dx");
}

std::size_t conformal_weight(std::size_t n)
{
	return n * (n - 1) / 2;
}

ConformalReport conformal_law_with_weight(std::span<const Poly> phis, const CoordinateChange &change,
                                          std::size_t weight)
{
	ConformalReport r;
	r.n = phis.size();
	r.weight = weight;
	r.phis.assign(phis.begin(), phis.end());
	r.change = change.y_of_x();

	std::vector<Poly> pulled;
	for (const Poly &phi : phis)
		pulled.push_back(compose(phi, change.y_of_x()));
	r.lhs = wronskian(pulled);
	r.rhs = pow(change.dy_dx(), weight) * compose(wronskian(phis), change.y_of_x());
	r.equal = r.lhs == r.rhs;
	return r;
}

ConformalReport verify_conformal_law(std::span<const Poly> phis, const CoordinateChange &change)
{
	return conformal_law_with_weight(phis, change, conformal_weight(phis.size()));
}

} // namespace wronsk
