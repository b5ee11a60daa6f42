#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcd {

// Batch front end. Exit codes: 0 success, 1 I/O failure, 2 invalid input or
// parameters, 3 verification disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcd
