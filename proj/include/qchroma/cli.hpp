#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qchroma {

/* Runs one CLI invocation (arguments without the program name). Exit codes:
 * 0 success, 1 verification failure, 2 usage error, 3 resource guard. */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qchroma
