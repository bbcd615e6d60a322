#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallsod::cli {

/// Exit codes: 0 success, 1 bad input or domain error, 2 failed verification.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationFailed = 2;

/// Environment variable naming a directory of quiver JSON files, looked up as <dir>/<name>.json.
constexpr const char* kQuiverDirEnv = "HALLSOD_QUIVER_DIR";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallsod::cli
