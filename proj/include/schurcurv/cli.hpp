#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurcurv {

/// Entry point of the command-line tool. `args` excludes the program name.
/// Returns the process exit code: 0 success, 2 usage or domain error,
/// 1 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurcurv
