#pragma once

#include "report_json.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wronsk {

/// Optional overrides; unset fields take each suite's default sweep.
struct SuiteParams {
	std::optional<std::size_t> k;
	std::optional<std::size_t> l;
	std::optional<std::size_t> n;
	std::optional<std::size_t> degree_bound;
	std::optional<std::size_t> count;
	std::uint64_t seed = 1;
	std::size_t max_arity = 8;
};

struct SuiteResult {
	std::string suite;
	bool passed = false;
	std::size_t checks = 0;
	Json report;
};

/// eq4, eq6, eq7, eq9, eq12, eq15, jacobi-kN, witt, conformal, sl2
const std::vector<std::string> &suite_names();

/// Runs one named suite or "all". Throws std::invalid_argument for an unknown
/// name and ResourceLimitError when a parameter exceeds its cap.
SuiteResult run_suite(std::string_view name, const SuiteParams &params);

} // namespace wronsk
