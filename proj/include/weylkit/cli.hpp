#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylkit {

// Full command-line driver; parses argv-style arguments, writes the report
// to `out` and diagnostics to `err`. Exit codes: 0 success, 1 domain error
// (rank-deficient chi, homogeneity failure, inconsistent lambda, ...),
// 2 parse/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace weylkit
