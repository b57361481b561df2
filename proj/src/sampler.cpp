#include "wronsk/sampler.hpp"

namespace wronsk {

long Sampler::uniform(long lo, long hi)
{
	auto span = static_cast<std::uint64_t>(hi - lo) + 1;
	return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(long num_bound, long den_max)
{
	return Rational(uniform(-num_bound, num_bound), uniform(1, den_max));
}

Poly Sampler::poly(std::size_t degree, long coeff_bound)
{
	std::vector<Rational> c(degree + 1);
	for (auto &x : c)
		x = rational(coeff_bound, 4);
	while (c.back().is_zero())
		c.back() = rational(coeff_bound, 4);
	return Poly(std::move(c));
}

Poly Sampler::nonzero_poly(std::size_t max_degree, long coeff_bound)
{
	return poly(static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree))), coeff_bound);
}

} // namespace wronsk
