#pragma once

#include <iosfwd>

namespace covenum {

// Command-line front end shared by the binary and the tests. Parses argv,
// dispatches to the enumerators, streams solutions to `out` and diagnostics
// to `err`. Returns the process exit status: 0 success, 1 empty capacitated
// family or failed verification, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace covenum
