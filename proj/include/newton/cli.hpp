#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newton {

// Front end used by the njump binary and the CLI tests.  `args` excludes
// the program name.  Exit code: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace newton
