#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expdeg {

// Runs the command-line surface. Exit codes: 0 = success / stable / true,
// 1 = unstable / false (witness included in the JSON), 2 = input error.
// All output is deterministic for fixed inputs and seed.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expdeg
