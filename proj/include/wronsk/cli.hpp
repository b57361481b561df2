#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wronsk::cli {

enum ExitCode : int {
	kVerified = 0,
	kCounterexample = 1,
	kUsage = 2,
	kResourceCap = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wronsk::cli
