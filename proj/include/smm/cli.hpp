#pragma once

// Batch command-line driver: check, enumerate, prove, verify, suite, report.
// Deterministic: identical arguments and inputs give byte-identical output.
// Exit codes: 0 pass, 1 check/proof failure or unknown, 2 input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace smm {

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smm
