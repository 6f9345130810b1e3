#pragma once

#include <ostream>

namespace zzpa {

// Parses and runs one command. Reports go to out (JSON, CSV, or help text),
// structured error objects go to err. Returns the process exit code:
// 0 verdict reached, 1 verification failure, 2 invalid input, 3 undecided.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace zzpa
