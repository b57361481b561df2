#pragma once

#include <cstddef>
#include <vector>

namespace wronsk {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Visits each nonzero term sign(s) * m[s(0)][0] * ... * m[s(n-1)][n-1] of the
/// Leibniz expansion, pruning partial products that are already zero.
/// T needs `operator*` and `is_zero()`.
template <class T, class Visit>
void for_each_leibniz_term(const Matrix<T> &m, const T &one, Visit visit)
{
	const std::size_t n = m.size();
	std::vector<bool> used(n, false);
	auto rec = [&](auto &self, const T &prefix, std::size_t col, int sign) -> void {
		if (col == n) {
			visit(sign, prefix);
			return;
		}
		int later_used = 0;
		for (std::size_t row = n; row-- > 0;) {
			if (used[row]) {
				++later_used;
				continue;
			}
			T next = prefix * m[row][col];
			if (next.is_zero())
				continue;
			used[row] = true;
			self(self, next, col + 1, (later_used % 2) ? -sign : sign);
			used[row] = false;
		}
	};
	rec(rec, one, 0, 1);
}

} // namespace wronsk
