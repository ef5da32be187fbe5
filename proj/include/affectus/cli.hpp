#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affectus {

inline constexpr const char* kVersion = "0.1.0";

// args excludes the program name. Returns the process exit code:
// 0 success, 2 validation or usage error, 3 numeric failure.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affectus
