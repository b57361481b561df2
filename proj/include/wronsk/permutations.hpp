#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wronsk {

/// Visits every ordered product args[s(1)] * ... * args[s(N)], s in S_N,
/// together with sign(s). Products are built depth-first so that common
/// prefixes are multiplied once. The visiting order is deterministic.
template <class T, class Mul, class Visit>
void for_each_signed_product(std::span<const T> args, const T &one, Mul mul, Visit visit)
{
	const std::size_t n = args.size();
	std::vector<bool> used(n, false);

	auto rec = [&](auto &self, const T &prefix, std::size_t depth, int sign) -> void {
		if (depth == n) {
			visit(sign, prefix);
			return;
		}
		// appending index i adds one inversion per already-used index above i
		int later_used = 0;
		for (std::size_t i = n; i-- > 0;) {
			if (used[i]) {
				++later_used;
				continue;
			}
			used[i] = true;
			self(self, mul(prefix, args[i]), depth + 1, (later_used % 2) ? -sign : sign);
			used[i] = false;
		}
	};
	rec(rec, one, 0, 1);
}

/// Sign of a permutation given as a sequence of distinct integers.
template <class Int>
int permutation_sign(std::span<const Int> p)
{
	int s = 1;
	for (std::size_t i = 0; i < p.size(); ++i)
		for (std::size_t j = i + 1; j < p.size(); ++j)
			if (p[j] < p[i])
				s = -s;
	return s;
}

/// An (l, r)-unshuffle of {1, ..., l + r}: increasing on both blocks.
struct Unshuffle {
	std::vector<unsigned> first_block;
	std::vector<unsigned> second_block;
	int sign = 1;

	friend bool operator==(const Unshuffle &, const Unshuffle &) = default;
};

/// All (l, r)-unshuffles, lexicographic in the first block.
std::vector<Unshuffle> enumerate_unshuffles(unsigned l, unsigned r);

} // namespace wronsk
