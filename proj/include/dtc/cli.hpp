#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtc::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kRuntime = 2, kRelationFailure = 3 };

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; structured errors go to `err` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtc::cli
