#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitope {

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitDisagreement = 3 };

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orbitope
