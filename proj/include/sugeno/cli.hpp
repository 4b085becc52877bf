#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sugeno::cli {

enum ExitCode : int { kOk = 0, kVerdictFail = 1, kInputError = 2 };

// Runs one subcommand. `args` excludes the program name. Reports go to
// `out`; usage errors are reported on `out` as {"error":{code,message,location}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sugeno::cli
