#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alcove::cli {

// Batch front end. Exit codes: 0 success / all checks pass,
// 1 verification failures present, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alcove::cli
