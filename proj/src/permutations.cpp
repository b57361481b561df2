#include "wronsk/permutations.hpp"

namespace wronsk {

std::vector<Unshuffle> enumerate_unshuffles(unsigned l, unsigned r)
{
	const unsigned n = l + r;
	std::vector<Unshuffle> out;
	std::vector<unsigned> pick(l);
	for (unsigned i = 0; i < l; ++i)
		pick[i] = i + 1;

	for (;;) {
		Unshuffle u;
		u.first_block = pick;
		std::vector<bool> in_first(n + 1, false);
		for (unsigned v : pick)
			in_first[v] = true;
		for (unsigned v = 1; v <= n; ++v)
			if (!in_first[v])
				u.second_block.push_back(v);
		// inversions: pairs (first-block value, second-block value) out of order
		unsigned inversions = 0;
		for (unsigned a : u.first_block)
			for (unsigned b : u.second_block)
				if (b < a)
					++inversions;
		u.sign = inversions % 2 ? -1 : 1;
		out.push_back(std::move(u));

		// next l-combination in lexicographic order
		int i = static_cast<int>(l) - 1;
		while (i >= 0 && pick[i] == n - l + static_cast<unsigned>(i) + 1)
			--i;
		if (i < 0)
			break;
		++pick[i];
		for (unsigned j = static_cast<unsigned>(i) + 1; j < l; ++j)
			pick[j] = pick[j - 1] + 1;
	}
	return out;
}

} // namespace wronsk
