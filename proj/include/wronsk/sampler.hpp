#pragma once

#include "monomial.hpp"
#include "poly.hpp"

#include <cstdint>
#include <random>

namespace wronsk {

/// Seeded generator for randomized sweeps. Reductions are done by hand on
/// top of mt19937_64 so the stream is identical across standard libraries.
class Sampler {
public:
	explicit Sampler(std::uint64_t seed) : engine_(seed) {}

	/// Uniform in [lo, hi].
	long uniform(long lo, long hi);
	Rational rational(long num_bound, long den_max);
	/// Degree exactly `degree`, integer-over-small-denominator coefficients.
	Poly poly(std::size_t degree, long coeff_bound = 9);
	/// Random degree in 0..max_degree, never the zero polynomial.
	Poly nonzero_poly(std::size_t max_degree, long coeff_bound = 9);

private:
	std::mt19937_64 engine_;
};

} // namespace wronsk
