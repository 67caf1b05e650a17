#pragma once

// Command-line surface. run_cli is the whole program; the binary's main
// forwards argv so the behaviour is testable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace fol {

/// Exit codes: 0 success, 2 dicritical, 3 depth exceeded, 4 parse or input
/// error, 5 internal oracle mismatch. Errors are also emitted as structured
/// JSON on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fol
