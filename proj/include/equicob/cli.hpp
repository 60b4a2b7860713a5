#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace equicob::cli {

// Full command-line front end. Writes reports to `out`, errors to `err`.
// Exit status: 0 on success (a NONBOUNDING verdict is a success), 1 on
// non-realizable data or dataset validation failure, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

// Convenience for tests: argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equicob::cli
