#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bk::cli {

// Runs one brauer-kit command line. Exit codes: 0 success, 1 a verification
// reported a failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bk::cli
