#pragma once

// Command-line front end.  run() is separated from main() so tests can drive
// subcommands in-process and capture their output.
//
// Exit codes: 0 success, 1 usage or input validation, 2 mathematical finding
// (not-in-fiber, audit collisions or counterexamples).

#include <iosfwd>
#include <string>
#include <vector>

namespace goppa::cli {

extern const char* const kSchemaVersion;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goppa::cli
