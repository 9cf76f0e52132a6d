#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gmc::app {

enum ExitCode { kOk = 0, kDomainError = 1, kParseError = 2 };

// Runs the conj command line with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmc::app
