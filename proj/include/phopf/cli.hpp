#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phopf {

enum ExitCode { kExitPass = 0, kExitAxiomFailure = 1, kExitPrecondition = 2, kExitSchema = 3 };

// Runs `phopf <args...>` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phopf
